#include "mla/star.hpp"

#include <optional>

namespace mla {

StarTable::StarTable(std::size_t order, std::vector<Elem> flat)
    : order_(order), star_(std::move(flat)) {
  if (star_.size() != order_ * order_) throw Error(ErrorKind::Format, "star table has wrong size");
  for (std::size_t i = 0; i < star_.size(); ++i)
    if (star_[i] >= order_)
      throw Error(ErrorKind::NotClosed, "star",
                  {static_cast<Elem>(i / order_), static_cast<Elem>(i % order_)});
}

StarTable StarTable::from_rows(const std::vector<std::vector<Elem>>& rows) {
  const std::size_t n = rows.size();
  std::vector<Elem> flat;
  flat.reserve(n * n);
  for (const auto& r : rows) {
    if (r.size() != n) throw Error(ErrorKind::Format, "star table is not square");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return StarTable(n, std::move(flat));
}

StarTable StarTable::constant(std::size_t order, Elem value) {
  return StarTable(order, std::vector<Elem>(order * order, value));
}

std::vector<std::vector<Elem>> StarTable::rows() const {
  std::vector<std::vector<Elem>> out(order_);
  for (std::size_t a = 0; a < order_; ++a)
    out[a].assign(star_.begin() + a * order_, star_.begin() + (a + 1) * order_);
  return out;
}

Elem lie_commutator(const GroupTable& g, const StarTable& star, Elem a, Elem b) {
  return g.mul(g.inv(star(a, b)), g.comm(a, b));
}

namespace {

using Found = std::optional<Violation>;

Violation make(const char* label, std::vector<Elem> witness, Elem l, Elem r) {
  return Violation{label, std::move(witness), l, r};
}

template <class F>
Found scan1(std::size_t n, F&& f) {
  for (Elem x = 0; x < n; ++x)
    if (auto v = f(x)) return v;
  return std::nullopt;
}

template <class F>
Found scan2(std::size_t n, F&& f) {
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (auto v = f(x, y)) return v;
  return std::nullopt;
}

template <class F>
Found scan3(std::size_t n, F&& f) {
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (auto v = f(x, y, z)) return v;
  return std::nullopt;
}

template <class F>
Found scan4(std::size_t n, F&& f) {
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem u = 0; u < n; ++u)
        for (Elem v = 0; v < n; ++v)
          if (auto r = f(x, y, u, v)) return r;
  return std::nullopt;
}

void push(std::vector<Violation>& out, Found f) {
  if (f) out.push_back(std::move(*f));
}

}  // namespace

std::vector<Violation> check_mla_axioms(const GroupTable& g, const StarTable& s) {
  if (s.order() != g.order()) throw Error(ErrorKind::Format, "star order does not match group");
  const std::size_t n = g.order();
  const Elem e = g.identity();
  std::vector<Violation> out;

  push(out, scan1(n, [&](Elem x) -> Found {
         if (s(x, x) != e) return make("axiom1", {x}, s(x, x), e);
         return std::nullopt;
       }));
  push(out, scan3(n, [&](Elem x, Elem y, Elem z) -> Found {
         const Elem l = s(x, g.mul(y, z));
         const Elem r = g.mul(s(x, y), g.conj(y, s(x, z)));
         if (l != r) return make("axiom2", {x, y, z}, l, r);
         return std::nullopt;
       }));
  push(out, scan3(n, [&](Elem x, Elem y, Elem z) -> Found {
         const Elem l = s(g.mul(x, y), z);
         const Elem r = g.mul(g.conj(x, s(y, z)), s(x, z));
         if (l != r) return make("axiom3", {x, y, z}, l, r);
         return std::nullopt;
       }));
  push(out, scan3(n, [&](Elem x, Elem y, Elem z) -> Found {
         const Elem a = s(s(x, y), g.conj(y, z));
         const Elem b = s(s(y, z), g.conj(z, x));
         const Elem c = s(s(z, x), g.conj(x, y));
         const Elem l = g.mul(g.mul(a, b), c);
         if (l != e) return make("axiom4", {x, y, z}, l, e);
         return std::nullopt;
       }));
  push(out, scan3(n, [&](Elem x, Elem y, Elem z) -> Found {
         const Elem l = g.conj(z, s(x, y));
         const Elem r = s(g.conj(z, x), g.conj(z, y));
         if (l != r) return make("axiom5", {x, y, z}, l, r);
         return std::nullopt;
       }));
  return out;
}

std::vector<Violation> check_derived_identities(const GroupTable& g, const StarTable& s) {
  if (s.order() != g.order()) throw Error(ErrorKind::Format, "star order does not match group");
  const std::size_t n = g.order();
  const Elem e = g.identity();
  std::vector<Elem> lie(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) lie[a * n + b] = lie_commutator(g, s, a, b);
  auto L = [&](Elem a, Elem b) { return lie[a * n + b]; };
  std::vector<Violation> out;

  push(out, scan1(n, [&](Elem x) -> Found {
         if (s(e, x) != e) return make("mla1", {x}, s(e, x), e);
         if (s(x, e) != e) return make("mla1", {x}, s(x, e), e);
         return std::nullopt;
       }));
  push(out, scan2(n, [&](Elem x, Elem y) -> Found {
         const Elem l = g.mul(s(x, y), s(y, x));
         if (l != e) return make("mla2", {x, y}, l, e);
         return std::nullopt;
       }));
  push(out, scan4(n, [&](Elem x, Elem y, Elem u, Elem v) -> Found {
         const Elem l = g.conj(s(x, y), s(u, v));
         const Elem r = g.conj(g.comm(x, y), s(u, v));
         if (l != r) return make("mla3", {x, y, u, v}, l, r);
         return std::nullopt;
       }));
  push(out, scan3(n, [&](Elem x, Elem y, Elem z) -> Found {
         const Elem l = g.comm(s(x, y), z);
         const Elem r = s(g.comm(x, y), z);
         if (l != r) return make("mla4", {x, y, z}, l, r);
         return std::nullopt;
       }));
  push(out, scan2(n, [&](Elem x, Elem y) -> Found {
         const Elem xi = g.inv(x), yi = g.inv(y);
         const Elem l1 = s(xi, y), r1 = g.conj(xi, g.inv(s(x, y)));
         if (l1 != r1) return make("mla5", {x, y}, l1, r1);
         const Elem l2 = s(x, yi), r2 = g.conj(yi, g.inv(s(x, y)));
         if (l2 != r2) return make("mla5", {x, y}, l2, r2);
         return std::nullopt;
       }));

  push(out, scan1(n, [&](Elem a) -> Found {
         if (L(a, a) != e) return make("lie1", {a}, L(a, a), e);
         return std::nullopt;
       }));
  push(out, scan2(n, [&](Elem a, Elem b) -> Found {
         const Elem l = g.mul(L(a, b), L(b, a));
         if (l != e) return make("lie2", {a, b}, l, e);
         return std::nullopt;
       }));
  push(out, scan3(n, [&](Elem a, Elem b, Elem c) -> Found {
         const Elem l = L(g.mul(a, b), c);
         const Elem r = g.mul(L(a, c), g.conj(g.conj(c, a), L(b, c)));
         if (l != r) return make("lie3", {a, b, c}, l, r);
         return std::nullopt;
       }));
  push(out, scan3(n, [&](Elem a, Elem b, Elem c) -> Found {
         const Elem l = L(a, g.mul(b, c));
         const Elem twist = g.comm(g.conj(b, c), g.conj(b, a));
         const Elem r = g.mul(g.conj(b, L(a, c)), g.conj(twist, L(a, b)));
         if (l != r) return make("lie4", {a, b, c}, l, r);
         return std::nullopt;
       }));
  push(out, scan3(n, [&](Elem a, Elem b, Elem c) -> Found {
         const Elem l = g.conj(a, L(b, c));
         const Elem r = L(g.conj(a, b), g.conj(a, c));
         if (l != r) return make("lie5", {a, b, c}, l, r);
         return std::nullopt;
       }));
  push(out, scan2(n, [&](Elem a, Elem b) -> Found {
         const Elem ai = g.inv(a), bi = g.inv(b);
         const Elem l1 = L(ai, b), r1 = g.conj(ai, L(b, a));
         if (l1 != r1) return make("lie6", {a, b}, l1, r1);
         const Elem l2 = L(a, bi), r2 = g.conj(bi, L(b, a));
         if (l2 != r2) return make("lie6", {a, b}, l2, r2);
         return std::nullopt;
       }));
  push(out, scan4(n, [&](Elem a, Elem b, Elem x, Elem y) -> Found {
         const Elem l = g.conj(L(a, b), s(x, y));
         if (l != s(x, y)) return make("lie7", {a, b, x, y}, l, s(x, y));
         return std::nullopt;
       }));
  return out;
}

// ---------------------------------------------------------------------------

Mla Mla::assess(GroupTable group, StarTable star) {
  Mla m(std::move(group), std::move(star));
  m.violations_ = check_mla_axioms(m.group_, m.star_);
  m.certified_ = m.violations_.empty();
  return m;
}

Mla Mla::certify(GroupTable group, StarTable star) {
  Mla m = assess(std::move(group), std::move(star));
  if (!m.certified_) {
    const auto& v = m.violations_.front();
    throw Error(ErrorKind::PreconditionFailed, v.label, v.witness);
  }
  return m;
}

LieRing::LieRing(Mla mla) : mla_(std::move(mla)) {
  if (!mla_.group().is_abelian())
    throw Error(ErrorKind::PreconditionFailed, "Lie ring needs an abelian group");
  if (!mla_.certified()) throw Error(ErrorKind::PreconditionFailed, "bracket is not certified");
}

LieRing LieRing::trivial(GroupTable group) { return LieRing(star_trivial(group)); }

StarTable trivial_star(const GroupTable& g) { return StarTable::constant(g.order(), g.identity()); }

StarTable improper_star(const GroupTable& g) {
  const std::size_t n = g.order();
  std::vector<Elem> flat(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) flat[a * n + b] = g.comm(a, b);
  return StarTable(n, std::move(flat));
}

Mla star_trivial(const GroupTable& g) { return Mla::certify(g, trivial_star(g)); }
Mla star_improper(const GroupTable& g) { return Mla::certify(g, improper_star(g)); }

}  // namespace mla
