#include "mla/abelian.hpp"

#include <numeric>

namespace mla {

namespace {

struct BasisSearch {
  const GroupTable& g;
  std::vector<Elem> chosen;
  std::vector<std::size_t> orders;
  // coords of every element of the current span (empty vector = not in span)
  std::vector<std::vector<std::size_t>> span_coords;
  std::vector<Elem> span;

  bool extend(std::size_t depth, std::size_t target_rank, Elem start) {
    if (span.size() == g.order()) return depth == target_rank;
    if (depth == target_rank) return false;
    for (Elem b = start; b < g.order(); ++b) {
      if (!span_coords[b].empty()) continue;
      const std::size_t d = g.element_order(b);
      // <b> must meet the current span trivially.
      bool independent = true;
      Elem m = b;
      for (std::size_t c = 1; c < d && independent; ++c, m = g.mul(m, b))
        independent = span_coords[m].empty();
      if (!independent) continue;

      const auto saved_span = span;
      const auto saved_coords = span_coords;
      std::vector<Elem> grown;
      for (Elem s : span) {
        Elem x = s;
        for (std::size_t c = 0; c < d; ++c, x = g.mul(x, b)) {
          auto cs = saved_coords[s];
          cs.push_back(c);
          span_coords[x] = std::move(cs);
          grown.push_back(x);
        }
      }
      span = std::move(grown);
      chosen.push_back(b);
      orders.push_back(d);
      if (extend(depth + 1, target_rank, b + 1)) return true;
      chosen.pop_back();
      orders.pop_back();
      span = saved_span;
      span_coords = saved_coords;
    }
    return false;
  }
};

Elem combine(const GroupTable& a, const std::vector<Elem>& values,
             const std::vector<long long>& coeffs) {
  Elem out = a.identity();
  for (std::size_t i = 0; i < values.size(); ++i)
    if (coeffs[i] != 0) out = a.mul(out, a.power(values[i], coeffs[i]));
  return out;
}

// Elements of A whose order divides k.
std::vector<Elem> killed_by(const GroupTable& a, std::size_t k) {
  std::vector<Elem> out;
  for (Elem v = 0; v < a.order(); ++v)
    if (k % a.element_order(v) == 0) out.push_back(v);
  return out;
}

bool biadditive(const GroupTable& q, const GroupTable& a,
                const std::vector<std::vector<Elem>>& t) {
  for (Elem x = 0; x < q.order(); ++x)
    for (Elem y = 0; y < q.order(); ++y)
      for (Elem z = 0; z < q.order(); ++z) {
        if (t[q.mul(x, y)][z] != a.mul(t[x][z], t[y][z])) return false;
        if (t[x][q.mul(y, z)] != a.mul(t[x][y], t[x][z])) return false;
      }
  return true;
}

// Enumerates every assignment of candidate values to `slots`, building the
// table via `coefficient(slot, xc, yc)` and keeping the ones `accept`s.
template <class Coef, class Accept>
std::vector<std::vector<std::vector<Elem>>> enumerate_forms(
    const GroupTable& q, const GroupTable& a, const AbelianBasis& basis,
    const std::vector<std::vector<Elem>>& candidates, Coef coefficient, Accept accept) {
  std::vector<std::vector<std::vector<Elem>>> out;
  const std::size_t slots = candidates.size();
  std::vector<std::size_t> pick(slots, 0);
  while (true) {
    std::vector<Elem> values(slots);
    for (std::size_t s = 0; s < slots; ++s) values[s] = candidates[s][pick[s]];
    std::vector<std::vector<Elem>> table(q.order(), std::vector<Elem>(q.order()));
    std::vector<long long> coeffs(slots);
    for (Elem x = 0; x < q.order(); ++x)
      for (Elem y = 0; y < q.order(); ++y) {
        const auto& xc = basis.coords(x);
        const auto& yc = basis.coords(y);
        for (std::size_t s = 0; s < slots; ++s) coeffs[s] = coefficient(s, xc, yc);
        table[x][y] = combine(a, values, coeffs);
      }
    if (accept(table)) out.push_back(std::move(table));
    std::size_t s = 0;
    while (s < slots && ++pick[s] == candidates[s].size()) pick[s++] = 0;
    if (s == slots) break;
  }
  return out;
}

}  // namespace

AbelianBasis::AbelianBasis(const GroupTable& g) : group_(&g) {
  if (!g.is_abelian()) throw Error(ErrorKind::PreconditionFailed, "group is not abelian");
  for (std::size_t rank = 0;; ++rank) {
    BasisSearch search{g, {}, {}, std::vector<std::vector<std::size_t>>(g.order()), {}};
    search.span = {g.identity()};
    // An empty coordinate list means "not in span", so every member carries a
    // leading sentinel while searching; it is stripped afterwards.
    search.span_coords[g.identity()].push_back(0);
    if (search.extend(0, rank, 0)) {
      basis_ = std::move(search.chosen);
      orders_ = std::move(search.orders);
      coords_ = std::move(search.span_coords);
      for (auto& c : coords_) c.erase(c.begin());
      return;
    }
  }
}

Elem AbelianBasis::element(const std::vector<std::size_t>& coords) const {
  Elem out = group_->identity();
  for (std::size_t i = 0; i < basis_.size(); ++i)
    out = group_->mul(out, group_->power(basis_[i], static_cast<long long>(coords[i])));
  return out;
}

Elem AbelianBasis::scale(Elem a, long long k) const { return group_->power(a, k); }

std::vector<std::vector<std::vector<Elem>>> alternating_biadditive_maps(const GroupTable& q,
                                                                        const GroupTable& a) {
  if (!a.is_abelian()) throw Error(ErrorKind::PreconditionFailed, "target is not abelian");
  const AbelianBasis basis(q);
  const std::size_t k = basis.rank();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::vector<Elem>> candidates;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      pairs.emplace_back(i, j);
      candidates.push_back(killed_by(a, std::gcd(basis.orders()[i], basis.orders()[j])));
    }
  auto coefficient = [&](std::size_t s, const std::vector<std::size_t>& xc,
                         const std::vector<std::size_t>& yc) {
    const auto [i, j] = pairs[s];
    return static_cast<long long>(xc[i] * yc[j]) - static_cast<long long>(xc[j] * yc[i]);
  };
  auto accept = [&](const std::vector<std::vector<Elem>>& t) {
    for (Elem x = 0; x < q.order(); ++x)
      if (t[x][x] != a.identity()) return false;
    return biadditive(q, a, t);
  };
  return enumerate_forms(q, a, basis, candidates, coefficient, accept);
}

std::vector<std::vector<std::vector<Elem>>> biadditive_maps(const GroupTable& q,
                                                            const GroupTable& a) {
  if (!a.is_abelian()) throw Error(ErrorKind::PreconditionFailed, "target is not abelian");
  const AbelianBasis basis(q);
  const std::size_t k = basis.rank();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::vector<Elem>> candidates;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      pairs.emplace_back(i, j);
      candidates.push_back(killed_by(a, std::gcd(basis.orders()[i], basis.orders()[j])));
    }
  auto coefficient = [&](std::size_t s, const std::vector<std::size_t>& xc,
                         const std::vector<std::size_t>& yc) {
    const auto [i, j] = pairs[s];
    return static_cast<long long>(xc[i] * yc[j]);
  };
  auto accept = [&](const std::vector<std::vector<Elem>>& t) { return biadditive(q, a, t); };
  return enumerate_forms(q, a, basis, candidates, coefficient, accept);
}

}  // namespace mla
