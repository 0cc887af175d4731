#include "mla/structure.hpp"

#include <deque>

namespace mla {

namespace {

std::optional<std::vector<Elem>> noncommuting_pair(const GroupTable& g, const Subset& s) {
  const auto elems = s.elements();
  for (Elem a : elems)
    for (Elem b : elems)
      if (g.mul(a, b) != g.mul(b, a)) return std::vector<Elem>{a, b};
  return std::nullopt;
}

void require_order(const GroupTable& g, const StarTable& star) {
  if (g.order() != star.order()) throw Error(ErrorKind::Format, "star order does not match group");
}

}  // namespace

Subset star_span(const GroupTable& g, const StarTable& star, const Subset& a, const Subset& b) {
  require_order(g, star);
  Subset gens(g.order());
  for (Elem x : a.elements())
    for (Elem y : b.elements()) gens.insert(star(x, y));
  return subgroup_closure(g, gens);
}

Subset lie_span(const GroupTable& g, const StarTable& star, const Subset& a, const Subset& b) {
  require_order(g, star);
  Subset gens(g.order());
  for (Elem x : a.elements())
    for (Elem y : b.elements()) gens.insert(lie_commutator(g, star, x, y));
  return subgroup_closure(g, gens);
}

Subset ideal_closure(const GroupTable& g, const StarTable& star, const Subset& s) {
  require_order(g, star);
  const std::size_t n = g.order();
  Subset out(n);
  std::vector<Elem> members;
  std::deque<Elem> work;
  auto add = [&](Elem x) {
    if (!out.contains(x)) {
      out.insert(x);
      members.push_back(x);
      work.push_back(x);
    }
  };
  add(g.identity());
  for (Elem x : s.elements()) add(x);
  while (!work.empty()) {
    const Elem x = work.front();
    work.pop_front();
    add(g.inv(x));
    for (std::size_t i = 0; i < members.size(); ++i) {
      add(g.mul(x, members[i]));
      add(g.mul(members[i], x));
    }
    for (Elem z = 0; z < n; ++z) {
      add(g.conj(z, x));
      add(star(z, x));
      add(star(x, z));
    }
  }
  return out;
}

std::optional<std::vector<Elem>> ideal_witness(const GroupTable& g, const StarTable& star,
                                               const Subset& n) {
  require_order(g, star);
  const auto members = n.elements();
  if (!n.contains(g.identity())) return std::vector<Elem>{g.identity()};
  for (Elem a : members)
    for (Elem b : members)
      if (!n.contains(g.mul(a, b))) return std::vector<Elem>{a, b};
  for (Elem z = 0; z < g.order(); ++z)
    for (Elem a : members)
      if (!n.contains(g.conj(z, a))) return std::vector<Elem>{z, a};
  for (Elem z = 0; z < g.order(); ++z)
    for (Elem a : members)
      if (!n.contains(star(z, a)) || !n.contains(star(a, z))) return std::vector<Elem>{z, a};
  return std::nullopt;
}

std::string to_string(SeriesKind kind) {
  switch (kind) {
    case SeriesKind::GammaDerived: return "gamma-derived";
    case SeriesKind::GammaLowerCentral: return "gamma-lower-central";
    case SeriesKind::LieDerived: return "lie-derived";
    case SeriesKind::LieLowerCentral: return "lie-lower-central";
  }
  return "unknown";
}

namespace {

template <class Next>
SeriesReport iterate_series(const GroupTable& g, SeriesKind kind, Next next) {
  SeriesReport r{kind, {}, false, std::nullopt};
  Subset term = Subset::full(g.order());
  const Subset trivial = Subset::single(g.order(), g.identity());
  while (true) {
    r.terms.push_back(term);
    if (term == trivial) {
      r.reaches_identity = true;
      r.length = static_cast<int>(r.terms.size()) - 1;
      return r;
    }
    Subset following = next(term);
    if (following == term) return r;
    term = std::move(following);
  }
}

}  // namespace

SeriesReport gamma_series(const GroupTable& g, const StarTable& star, bool lower_central) {
  const Subset all = Subset::full(g.order());
  if (lower_central)
    return iterate_series(g, SeriesKind::GammaLowerCentral,
                          [&](const Subset& t) { return star_span(g, star, all, t); });
  return iterate_series(g, SeriesKind::GammaDerived,
                        [&](const Subset& t) { return star_span(g, star, t, t); });
}

SeriesReport lie_series(const GroupTable& g, const StarTable& star, bool lower_central) {
  const Subset all = Subset::full(g.order());
  auto generated = [&](const Subset& a, const Subset& b) {
    Subset gens(g.order());
    for (Elem x : a.elements())
      for (Elem y : b.elements()) gens.insert(lie_commutator(g, star, x, y));
    return ideal_closure(g, star, gens);
  };
  if (lower_central)
    return iterate_series(g, SeriesKind::LieLowerCentral,
                          [&](const Subset& t) { return generated(all, t); });
  return iterate_series(g, SeriesKind::LieDerived,
                        [&](const Subset& t) { return generated(t, t); });
}

Subset mz_center(const GroupTable& g, const StarTable& star) {
  require_order(g, star);
  Subset out(g.order());
  for (Elem a = 0; a < g.order(); ++a) {
    bool in = true;
    for (Elem b = 0; b < g.order() && in; ++b) in = lie_commutator(g, star, a, b) == g.identity();
    if (in) out.insert(a);
  }
  return out;
}

Subset lz_center(const GroupTable& g, const StarTable& star) {
  require_order(g, star);
  Subset out(g.order());
  for (Elem a = 0; a < g.order(); ++a) {
    bool in = true;
    for (Elem b = 0; b < g.order() && in; ++b) in = star(a, b) == g.identity();
    if (in) out.insert(a);
  }
  return out;
}

Mla induced_quotient_star(const GroupTable& g, const StarTable& star, const Subset& n) {
  if (auto w = ideal_witness(g, star, n)) throw Error(ErrorKind::NotAnIdeal, "", *w);
  auto [q, proj] = quotient(g, n);
  const auto reps = coset_representatives(proj);
  const std::size_t m = q.order();
  std::vector<Elem> flat(m * m);
  for (Elem i = 0; i < m; ++i)
    for (Elem j = 0; j < m; ++j) flat[i * m + j] = proj(star(reps[i], reps[j]));
  StarTable qs(m, std::move(flat));
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b)
      if (proj(star(a, b)) != qs(proj(a), proj(b)))
        throw Error(ErrorKind::NotWellDefined, "", {a, b});
  Mla out = Mla::assess(std::move(q), std::move(qs));
  if (!out.certified())
    throw Error(ErrorKind::ConstructionInvalid, "quotient star fails " + out.violations()[0].label,
                out.violations()[0].witness);
  return out;
}

bool is_trivial_star(const GroupTable& g, const StarTable& star) {
  for (Elem v : star.flat())
    if (v != g.identity()) return false;
  return true;
}

Mla combine_structures(const GroupTable& g, const StarTable& first, const StarTable& second) {
  require_order(g, first);
  require_order(g, second);
  if (!check_mla_axioms(g, first).empty())
    throw Error(ErrorKind::PreconditionFailed, "first star is not certified");
  if (!check_mla_axioms(g, second).empty())
    throw Error(ErrorKind::PreconditionFailed, "second star is not certified");
  const std::size_t n = g.order();
  const Subset all = Subset::full(n);

  if (auto w = noncommuting_pair(g, star_span(g, first, all, all)))
    throw Error(ErrorKind::PreconditionFailed, "condition1", *w);
  if (auto w = noncommuting_pair(g, star_span(g, second, all, all)))
    throw Error(ErrorKind::PreconditionFailed, "condition1", *w);

  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const Elem a = first(x, y);
      for (Elem z = 0; z < n; ++z)
        for (Elem w = 0; w < n; ++w) {
          const Elem b = second(z, w);
          if (g.mul(a, b) != g.mul(b, a))
            throw Error(ErrorKind::PreconditionFailed, "condition2", {x, y, z, w});
        }
    }

  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z) {
        const Elem yz = g.conj(y, z), zx = g.conj(z, x), xy = g.conj(x, y);
        Elem acc = g.identity();
        acc = g.mul(acc, second(first(x, y), yz));
        acc = g.mul(acc, first(second(x, y), yz));
        acc = g.mul(acc, second(first(y, z), zx));
        acc = g.mul(acc, first(second(y, z), zx));
        acc = g.mul(acc, second(first(z, x), xy));
        acc = g.mul(acc, first(second(z, x), xy));
        if (acc != g.identity())
          throw Error(ErrorKind::PreconditionFailed, "condition3", {x, y, z});
      }

  std::vector<Elem> flat(n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) flat[x * n + y] = g.mul(first(x, y), second(x, y));
  Mla out = Mla::assess(g, StarTable(n, std::move(flat)));
  if (!out.certified())
    throw Error(ErrorKind::TheoremViolated, out.violations()[0].label,
                out.violations()[0].witness);
  return out;
}

Class2Report class2_property_report(const GroupTable& g, const StarTable& star) {
  require_order(g, star);
  if (!is_class2(g)) throw Error(ErrorKind::PreconditionFailed, "group is not of class <= 2");
  const std::size_t n = g.order();
  const Elem e = g.identity();
  const Subset all = Subset::full(n);
  const Subset derived = derived_subgroup(g);
  Class2Report r;

  for (Elem a : derived.elements()) {
    for (Elem b : derived.elements())
      if (star(a, b) != e) {
        r.commutator_star_trivial = {false, {a, b}};
        break;
      }
    if (!r.commutator_star_trivial.holds) break;
  }

  if (auto w = noncommuting_pair(g, star_span(g, star, all, all)))
    r.star_span_abelian = {false, *w};
  if (auto w = noncommuting_pair(g, lie_span(g, star, all, all)))
    r.lie_span_abelian = {false, *w};

  const auto mz = mz_center(g, star).elements();
  [&] {
    for (Elem x : mz)
      for (Elem y : mz)
        for (Elem z = 0; z < n; ++z)
          if (g.comm(z, star(x, y)) != e) {
            r.mz_star_central = {false, {x, y, z}};
            return;
          }
  }();

  [&] {
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        for (Elem u = 0; u < n; ++u)
          for (Elem v = 0; v < n; ++v)
            if (star(star(x, y), g.comm(u, v)) != e) {
              r.star_kills_commutators = {false, {x, y, u, v}};
              return;
            }
  }();
  return r;
}

}  // namespace mla
