#include "mla/group.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace mla {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::MissingInverse: return "MissingInverse";
    case ErrorKind::InvalidParameters: return "InvalidParameters";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::NotWellDefined: return "NotWellDefined";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::ConstructionInvalid: return "ConstructionInvalid";
    case ErrorKind::TheoremViolated: return "TheoremViolated";
    case ErrorKind::QuotientMismatch: return "QuotientMismatch";
    case ErrorKind::NotCentralType: return "NotCentralType";
    case ErrorKind::ConditionFailed: return "ConditionFailed";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::Format: return "Format";
  }
  return "Unknown";
}

namespace {

std::string describe(ErrorKind kind, const std::string& label,
                     const std::vector<Elem>& witness) {
  std::ostringstream os;
  os << to_string(kind);
  if (!label.empty()) os << " (" << label << ")";
  if (!witness.empty()) {
    os << " at (";
    for (std::size_t i = 0; i < witness.size(); ++i)
      os << (i ? "," : "") << witness[i];
    os << ")";
  }
  return os.str();
}

}  // namespace

Error::Error(ErrorKind kind, std::string label, std::vector<Elem> witness)
    : std::runtime_error(describe(kind, label, witness)),
      kind_(kind),
      label_(std::move(label)),
      witness_(std::move(witness)) {}

// ---------------------------------------------------------------------------
// GroupTable

Elem GroupTable::power(Elem a, long long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  Elem result = identity_;
  Elem base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::vector<std::vector<Elem>> GroupTable::rows() const {
  std::vector<std::vector<Elem>> out(order_);
  for (std::size_t a = 0; a < order_; ++a)
    out[a].assign(mul_.begin() + a * order_, mul_.begin() + (a + 1) * order_);
  return out;
}

bool GroupTable::is_abelian() const noexcept {
  for (Elem a = 0; a < order_; ++a)
    for (Elem b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::size_t GroupTable::element_order(Elem a) const {
  std::size_t k = 1;
  for (Elem x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

GroupTable validate_group(const std::vector<std::vector<Elem>>& raw,
                          std::string name) {
  const std::size_t n = raw.size();
  if (n == 0) throw Error(ErrorKind::Format, "empty table");
  for (const auto& row : raw)
    if (row.size() != n) throw Error(ErrorKind::Format, "table is not square");

  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (raw[a][b] >= n) throw Error(ErrorKind::NotClosed, "", {a, b});

  GroupTable g;
  g.name_ = std::move(name);
  g.order_ = n;
  g.mul_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    std::copy(raw[a].begin(), raw[a].end(), g.mul_.begin() + a * n);

  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const Elem ab = g.mul(a, b);
      for (Elem c = 0; c < n; ++c)
        if (g.mul(ab, c) != g.mul(a, g.mul(b, c)))
          throw Error(ErrorKind::NotAssociative, "", {a, b, c});
    }

  bool found = false;
  for (Elem e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (Elem a = 0; a < n && ok; ++a)
      ok = g.mul(e, a) == a && g.mul(a, e) == a;
    if (ok) {
      g.identity_ = e;
      found = true;
    }
  }
  if (!found) throw Error(ErrorKind::NoIdentity, "");

  g.inv_.assign(n, 0);
  for (Elem a = 0; a < n; ++a) {
    bool has = false;
    for (Elem b = 0; b < n && !has; ++b) {
      if (g.mul(a, b) == g.identity_ && g.mul(b, a) == g.identity_) {
        g.inv_[a] = b;
        has = true;
      }
    }
    if (!has) throw Error(ErrorKind::MissingInverse, "", {a});
  }
  return g;
}

// ---------------------------------------------------------------------------
// Subset

Subset::Subset(std::size_t parent_order, std::initializer_list<Elem> elems)
    : members_(parent_order, 0) {
  for (Elem e : elems) members_.at(e) = 1;
}

Subset::Subset(std::size_t parent_order, std::span<const Elem> elems)
    : members_(parent_order, 0) {
  for (Elem e : elems) members_.at(e) = 1;
}

Subset Subset::full(std::size_t parent_order) {
  Subset s(parent_order);
  std::fill(s.members_.begin(), s.members_.end(), 1);
  return s;
}

Subset Subset::single(std::size_t parent_order, Elem e) {
  Subset s(parent_order);
  s.insert(e);
  return s;
}

std::size_t Subset::size() const noexcept {
  return static_cast<std::size_t>(std::count(members_.begin(), members_.end(), 1));
}

std::vector<Elem> Subset::elements() const {
  std::vector<Elem> out;
  for (Elem i = 0; i < members_.size(); ++i)
    if (members_[i]) out.push_back(i);
  return out;
}

bool Subset::is_subset_of(const Subset& other) const noexcept {
  for (std::size_t i = 0; i < members_.size(); ++i)
    if (members_[i] && !other.members_[i]) return false;
  return true;
}

// ---------------------------------------------------------------------------
// GroupHom

bool GroupHom::is_homomorphism() const {
  if (image.size() != source.order()) return false;
  if (image[source.identity()] != target.identity()) return false;
  for (Elem a = 0; a < source.order(); ++a)
    for (Elem b = 0; b < source.order(); ++b)
      if (image[source.mul(a, b)] != target.mul(image[a], image[b])) return false;
  return true;
}

Subset GroupHom::kernel() const {
  Subset k(source.order());
  for (Elem a = 0; a < source.order(); ++a)
    if (image[a] == target.identity()) k.insert(a);
  return k;
}

// ---------------------------------------------------------------------------
// Subgroups

bool is_subgroup(const GroupTable& g, const Subset& s) {
  if (!s.contains(g.identity())) return false;
  const auto elems = s.elements();
  for (Elem a : elems) {
    if (!s.contains(g.inv(a))) return false;
    for (Elem b : elems)
      if (!s.contains(g.mul(a, b))) return false;
  }
  return true;
}

bool is_normal(const GroupTable& g, const Subset& s) {
  if (!is_subgroup(g, s)) return false;
  for (Elem z = 0; z < g.order(); ++z)
    for (Elem a : s.elements())
      if (!s.contains(g.conj(z, a))) return false;
  return true;
}

namespace {

// Worklist saturation; `conjugate` additionally closes under G-conjugation.
Subset saturate(const GroupTable& g, const Subset& gens, bool conjugate) {
  Subset out(g.order());
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
  for (Elem x : gens.elements()) add(x);
  while (!work.empty()) {
    const Elem x = work.front();
    work.pop_front();
    add(g.inv(x));
    // Iterate by index: `members` may grow during the loop.
    for (std::size_t i = 0; i < members.size(); ++i) {
      add(g.mul(x, members[i]));
      add(g.mul(members[i], x));
    }
    if (conjugate)
      for (Elem z = 0; z < g.order(); ++z) add(g.conj(z, x));
  }
  return out;
}

}  // namespace

Subset subgroup_closure(const GroupTable& g, const Subset& gens) {
  return saturate(g, gens, false);
}

Subset normal_closure(const GroupTable& g, const Subset& gens) {
  return saturate(g, gens, true);
}

Subset center(const GroupTable& g) {
  Subset z(g.order());
  for (Elem a = 0; a < g.order(); ++a) {
    bool central = true;
    for (Elem x = 0; x < g.order() && central; ++x)
      central = g.mul(a, x) == g.mul(x, a);
    if (central) z.insert(a);
  }
  return z;
}

Subset commutator_span(const GroupTable& g, const Subset& a, const Subset& b) {
  Subset gens(g.order());
  for (Elem x : a.elements())
    for (Elem y : b.elements()) gens.insert(g.comm(x, y));
  return subgroup_closure(g, gens);
}

Subset derived_subgroup(const GroupTable& g) {
  const Subset all = Subset::full(g.order());
  return commutator_span(g, all, all);
}

bool is_class2(const GroupTable& g) {
  return derived_subgroup(g).is_subset_of(center(g));
}

std::vector<Elem> generating_sequence(const GroupTable& g) {
  std::vector<Elem> gens;
  Subset span = Subset::single(g.order(), g.identity());
  for (Elem x = 0; x < g.order() && !span.is_full(); ++x) {
    if (span.contains(x)) continue;
    gens.push_back(x);
    span = subgroup_closure(g, Subset(g.order(), std::span<const Elem>(gens)));
  }
  return gens;
}

std::pair<GroupTable, GroupHom> quotient(const GroupTable& g, const Subset& n) {
  if (!is_subgroup(g, n)) throw Error(ErrorKind::NotNormal, "not a subgroup");
  const auto members = n.elements();
  for (Elem z = 0; z < g.order(); ++z)
    for (Elem a : members)
      if (!n.contains(g.conj(z, a))) throw Error(ErrorKind::NotNormal, "", {z, a});

  constexpr Elem kUnset = static_cast<Elem>(-1);
  std::vector<Elem> coset_of(g.order(), kUnset);
  std::vector<Elem> reps;
  for (Elem a = 0; a < g.order(); ++a) {
    if (coset_of[a] != kUnset) continue;
    const Elem idx = static_cast<Elem>(reps.size());
    reps.push_back(a);
    for (Elem m : members) coset_of[g.mul(a, m)] = idx;
  }
  const std::size_t q = reps.size();
  std::vector<std::vector<Elem>> raw(q, std::vector<Elem>(q));
  for (Elem i = 0; i < q; ++i)
    for (Elem j = 0; j < q; ++j) raw[i][j] = coset_of[g.mul(reps[i], reps[j])];

  GroupTable qt = validate_group(raw, g.name() + "/N");
  GroupHom proj{g, qt, coset_of};
  return {std::move(qt), std::move(proj)};
}

std::vector<Elem> coset_representatives(const GroupHom& projection) {
  constexpr Elem kUnset = static_cast<Elem>(-1);
  std::vector<Elem> reps(projection.target.order(), kUnset);
  for (Elem a = 0; a < projection.source.order(); ++a)
    if (reps[projection.image[a]] == kUnset) reps[projection.image[a]] = a;
  return reps;
}

std::pair<GroupTable, GroupHom> induced_subgroup(const GroupTable& g, const Subset& s) {
  if (!is_subgroup(g, s)) throw Error(ErrorKind::PreconditionFailed, "not a subgroup");
  const auto members = s.elements();
  std::vector<Elem> index_of(g.order(), 0);
  for (Elem i = 0; i < members.size(); ++i) index_of[members[i]] = i;
  std::vector<std::vector<Elem>> raw(members.size(), std::vector<Elem>(members.size()));
  for (Elem i = 0; i < members.size(); ++i)
    for (Elem j = 0; j < members.size(); ++j)
      raw[i][j] = index_of[g.mul(members[i], members[j])];
  GroupTable sub = validate_group(raw, g.name() + "|S");
  GroupHom incl{sub, g, members};
  return {std::move(sub), std::move(incl)};
}

GroupTable direct_product(const GroupTable& g, const GroupTable& h) {
  const std::size_t ng = g.order(), nh = h.order(), n = ng * nh;
  std::vector<std::vector<Elem>> raw(n, std::vector<Elem>(n));
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const Elem a = g.mul(x % ng, y % ng);
      const Elem b = h.mul(x / ng, y / ng);
      raw[x][y] = static_cast<Elem>(a + ng * b);
    }
  return validate_group(raw, g.name() + "x" + h.name());
}

}  // namespace mla
