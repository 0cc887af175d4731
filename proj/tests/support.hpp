#pragma once

// Independent oracles and generators shared by the unit, property and
// acceptance tests. Nothing here calls the search or the extension builder.

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "mla/catalog.hpp"
#include "mla/extension.hpp"
#include "mla/families.hpp"
#include "mla/search.hpp"
#include "mla/structure.hpp"

namespace oracle {

using mla::Elem;
using mla::GroupTable;
using mla::StarTable;

constexpr Elem kUnset = static_cast<Elem>(-1);

// True unless some axiom instance whose cells are all assigned fails.
inline bool partial_ok(const GroupTable& g, const std::vector<Elem>& t) {
  const std::size_t n = g.order();
  auto s = [&](Elem a, Elem b) { return t[a * n + b]; };
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const Elem xy = s(x, y);
      for (Elem z = 0; z < n; ++z) {
        const Elem xz = s(x, z), yz = s(y, z), x_yz = s(x, g.mul(y, z)), xy_z = s(g.mul(x, y), z);
        if (xy != kUnset && xz != kUnset && x_yz != kUnset &&
            x_yz != g.mul(xy, g.mul(g.mul(y, xz), g.inv(y))))
          return false;
        if (yz != kUnset && xz != kUnset && xy_z != kUnset &&
            xy_z != g.mul(g.mul(g.mul(x, yz), g.inv(x)), xz))
          return false;
        const Elem cx = g.mul(g.mul(z, x), g.inv(z)), cy = g.mul(g.mul(z, y), g.inv(z));
        const Elem c = s(cx, cy);
        if (xy != kUnset && c != kUnset && c != g.mul(g.mul(z, xy), g.inv(z))) return false;
      }
    }
  return true;
}

/// Generate-and-test over every table with e on the diagonal and on the
/// identity row and column. Partial tables are pruned as soon as a fully
/// assigned instance of an axiom fails; complete tables must pass the full
/// axiom check. Only sensible for |G| <= 6.
inline std::vector<StarTable> naive_enumerate(const GroupTable& g) {
  const std::size_t n = g.order();
  const Elem e = g.identity();
  std::vector<Elem> t(n * n, kUnset);
  std::vector<std::size_t> cells;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (x == y || x == e || y == e) t[x * n + y] = e;
      else cells.push_back(x * n + y);
    }
  std::vector<StarTable> out;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == cells.size()) {
      StarTable s(n, t);
      if (mla::check_mla_axioms(g, s).empty()) out.push_back(std::move(s));
      return;
    }
    for (Elem v = 0; v < n; ++v) {
      t[cells[i]] = v;
      if (partial_ok(g, t)) self(self, i + 1);
    }
    t[cells[i]] = kUnset;
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

/// Brackets on the Klein group abelian(2,2) (index a + 2b) written in
/// coordinates: B(x, y) = (x1 y2 - x2 y1) v for each v, kept when the
/// Jacobi identity holds.
inline std::vector<StarTable> klein_brackets() {
  std::vector<StarTable> out;
  for (Elem v = 0; v < 4; ++v) {
    std::vector<Elem> t(16);
    for (Elem x = 0; x < 4; ++x)
      for (Elem y = 0; y < 4; ++y) {
        const int det = ((x & 1) * (y >> 1) + (x >> 1) * (y & 1)) % 2;
        t[x * 4 + y] = det ? v : 0;
      }
    bool jacobi = true;
    for (Elem x = 0; x < 4; ++x)
      for (Elem y = 0; y < 4; ++y)
        for (Elem z = 0; z < 4; ++z) {
          auto b = [&](Elem p, Elem q) { return t[p * 4 + q]; };
          jacobi = jacobi && (b(b(x, y), z) ^ b(b(y, z), x) ^ b(b(z, x), y)) == 0;
        }
    if (jacobi) out.emplace_back(4, t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Lie brackets on the elementary abelian group C2^k (index = bit mask,
/// first factor lowest bit). A bracket is fixed by its values v_ij on basis
/// pairs i < j; the Jacobiator is trilinear and alternating, so it suffices
/// to test it on basis triples i < j < l.
inline std::vector<StarTable> elementary_abelian_brackets(unsigned k) {
  const unsigned n = 1u << k;
  std::vector<std::pair<unsigned, unsigned>> pairs;
  for (unsigned i = 0; i < k; ++i)
    for (unsigned j = i + 1; j < k; ++j) pairs.emplace_back(i, j);
  std::vector<unsigned> v(pairs.size(), 0);
  auto bracket = [&](unsigned x, unsigned y) {
    unsigned r = 0;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      const auto [i, j] = pairs[p];
      if ((((x >> i) & (y >> j)) ^ ((x >> j) & (y >> i))) & 1u) r ^= v[p];
    }
    return r;
  };
  std::vector<StarTable> out;
  for (;;) {
    bool jacobi = true;
    for (unsigned i = 0; i < k && jacobi; ++i)
      for (unsigned j = i + 1; j < k && jacobi; ++j)
        for (unsigned l = j + 1; l < k && jacobi; ++l) {
          const unsigned a = 1u << i, b = 1u << j, c = 1u << l;
          jacobi = (bracket(bracket(a, b), c) ^ bracket(bracket(b, c), a) ^ bracket(bracket(c, a), b)) == 0;
        }
    if (jacobi) {
      std::vector<Elem> t(n * n);
      for (unsigned x = 0; x < n; ++x)
        for (unsigned y = 0; y < n; ++y) t[x * n + y] = bracket(x, y);
      out.emplace_back(n, std::move(t));
    }
    std::size_t p = 0;
    while (p < v.size() && ++v[p] == n) v[p++] = 0;
    if (p == v.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Heisenberg data: H = C3, K = C3 x C3 (index a + 3b), sigma trivial,
// f((a,b),(c,d)) = g^(b c), trivial brackets, gamma trivial, given h.
inline mla::ExtensionData heisenberg_data(const mla::Table& h) {
  const GroupTable H = mla::cyclic(3);
  const GroupTable K = mla::abelian({3, 3});
  mla::Table sigma(9, {0, 1, 2}), gamma(9, {0, 0, 0}), f(9, std::vector<Elem>(9));
  for (Elem x = 0; x < 9; ++x)
    for (Elem y = 0; y < 9; ++y) f[x][y] = ((x / 3) * (y % 3)) % 3;
  return {mla::LieRing::trivial(H), mla::LieRing::trivial(K), sigma, gamma, f, h};
}

inline mla::Table zero_table(std::size_t rows, std::size_t cols) {
  return mla::Table(rows, std::vector<Elem>(cols, 0));
}

// Alternating pairing on C3 x C3 with value c on (e1, e2): c (x1 y2 - x2 y1).
inline mla::Table heisenberg_pairing(Elem c) {
  mla::Table h = zero_table(9, 9);
  for (Elem x = 0; x < 9; ++x)
    for (Elem y = 0; y < 9; ++y) {
      const int det = static_cast<int>((x % 3) * (y / 3)) - static_cast<int>((x / 3) * (y % 3));
      h[x][y] = static_cast<Elem>(((det * static_cast<int>(c)) % 3 + 3) % 3);
    }
  return h;
}

// H = C5, K = C4, sigma_x = multiplication by 2^x, f = 1.
inline mla::ExtensionData c5_by_c4_data() {
  const GroupTable H = mla::cyclic(5);
  const GroupTable K = mla::cyclic(4);
  mla::Table sigma(4, std::vector<Elem>(5));
  for (Elem x = 0; x < 4; ++x) {
    Elem r = 1;
    for (Elem i = 0; i < x; ++i) r = r * 2 % 5;
    for (Elem k = 0; k < 5; ++k) sigma[x][k] = k * r % 5;
  }
  return {mla::LieRing::trivial(H), mla::LieRing::trivial(K), sigma, zero_table(4, 5),
          zero_table(4, 4), zero_table(4, 4)};
}

// Brute-force class-2 test: every commutator commutes with every element.
inline bool brute_class2(const GroupTable& g) {
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b) {
      const Elem c = g.comm(a, b);
      for (Elem z = 0; z < g.order(); ++z)
        if (g.mul(c, z) != g.mul(z, c)) return false;
    }
  return true;
}

inline std::size_t brute_center_size(const GroupTable& g) {
  std::size_t k = 0;
  for (Elem a = 0; a < g.order(); ++a) {
    bool central = true;
    for (Elem b = 0; b < g.order() && central; ++b) central = g.mul(a, b) == g.mul(b, a);
    k += central;
  }
  return k;
}

inline std::vector<Elem> all_commutators(const GroupTable& g) {
  std::set<Elem> s;
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b) s.insert(g.comm(a, b));
  return {s.begin(), s.end()};
}

}  // namespace oracle

namespace gen {

using mla::Elem;

inline mla::Subset random_subset(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  mla::Subset s(n);
  for (Elem i = 0; i < n; ++i)
    if (coin(rng)) s.insert(i);
  return s;
}

inline Elem random_elem(std::mt19937_64& rng, std::size_t n) {
  return static_cast<Elem>(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng));
}

// Catalog groups up to `max_order`.
inline std::vector<mla::GroupTable> catalog_groups(std::size_t max_order) {
  std::vector<mla::GroupTable> out;
  for (const auto& e : mla::standard_catalog())
    if (e.order <= max_order) out.push_back(mla::build_entry(e));
  return out;
}

}  // namespace gen
