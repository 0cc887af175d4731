#include "mla/search.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <map>
#include <set>

#include "mla/abelian.hpp"

namespace mla {

double default_budget_seconds() {
  if (const char* env = std::getenv("MLA_BUDGET_SECONDS")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && v > 0) return v;
  }
  return 60.0;
}

namespace {

using Clock = std::chrono::steady_clock;

class Deadline {
 public:
  explicit Deadline(double seconds)
      : end_(Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                std::chrono::duration<double>(seconds))) {}
  // Polls the clock every 256 calls.
  bool expired() {
    if (++ticks_ % 256 != 0) return hit_;
    if (!hit_ && Clock::now() > end_) hit_ = true;
    return hit_;
  }

 private:
  Clock::time_point end_;
  std::size_t ticks_ = 0;
  bool hit_ = false;
};

constexpr Elem kUnknown = static_cast<Elem>(-1);

// Partial star table with forced-value propagation and an undo trail.
class Propagator {
 public:
  explicit Propagator(const GroupTable& g) : g_(g), n_(g.order()), t_(n_ * n_, kUnknown) {}

  Elem at(Elem x, Elem y) const { return t_[x * n_ + y]; }
  std::size_t mark() const { return trail_.size(); }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      t_[trail_.back()] = kUnknown;
      trail_.pop_back();
    }
    queue_.clear();
  }

  bool assign(Elem x, Elem y, Elem v) {
    const std::size_t idx = x * n_ + y;
    if (t_[idx] != kUnknown) return t_[idx] == v;
    t_[idx] = v;
    trail_.push_back(idx);
    queue_.push_back(idx);
    return true;
  }

  bool propagate() {
    for (std::size_t q = 0; q < queue_.size(); ++q) {
      const Elem x = static_cast<Elem>(queue_[q] / n_);
      const Elem y = static_cast<Elem>(queue_[q] % n_);
      if (!fire(x, y, t_[queue_[q]])) {
        queue_.clear();
        return false;
      }
    }
    queue_.clear();
    return true;
  }

  std::optional<std::size_t> first_unknown() const {
    for (std::size_t i = 0; i < t_.size(); ++i)
      if (t_[i] == kUnknown) return i;
    return std::nullopt;
  }

  StarTable table() const { return StarTable(n_, t_); }

  // False when some twisted Jacobi instance has all six cells known and fails.
  bool jacobi_consistent() const {
    const GroupTable& g = g_;
    const Elem e = g.identity();
    for (Elem x = 0; x < n_; ++x)
      for (Elem y = 0; y < n_; ++y) {
        const Elem xy = at(x, y);
        if (xy == kUnknown) continue;
        for (Elem z = 0; z < n_; ++z) {
          const Elem a = at(xy, g.conj(y, z));
          if (a == kUnknown) continue;
          const Elem yz = at(y, z), zx = at(z, x);
          if (yz == kUnknown || zx == kUnknown) continue;
          const Elem b = at(yz, g.conj(z, x)), c = at(zx, g.conj(x, y));
          if (b == kUnknown || c == kUnknown) continue;
          if (g.mul(g.mul(a, b), c) != e) return false;
        }
      }
    return true;
  }

 private:
  bool fire(Elem x, Elem y, Elem v) {
    const GroupTable& g = g_;
    if (!assign(y, x, g.inv(v))) return false;
    for (Elem z = 0; z < n_; ++z) {
      // x * (y z) = (x * y) ^y(x * z), in both orders of y and z
      const Elem xz = at(x, z);
      if (xz != kUnknown) {
        if (!assign(x, g.mul(y, z), g.mul(v, g.conj(y, xz)))) return false;
        if (!assign(x, g.mul(z, y), g.mul(xz, g.conj(z, v)))) return false;
      }
      // (x w) * y = ^x(w * y) (x * y), in both orders of x and w
      const Elem zy = at(z, y);
      if (zy != kUnknown) {
        if (!assign(g.mul(x, z), y, g.mul(g.conj(x, zy), v))) return false;
        if (!assign(g.mul(z, x), y, g.mul(g.conj(z, v), zy))) return false;
      }
      if (!assign(g.conj(z, x), g.conj(z, y), g.conj(z, v))) return false;
    }
    return true;
  }

  const GroupTable& g_;
  std::size_t n_;
  std::vector<Elem> t_;
  std::vector<std::size_t> trail_;
  std::vector<std::size_t> queue_;
};

class Search {
 public:
  Search(const GroupTable& g, const SearchOptions& opts)
      : g_(g), opts_(opts), deadline_(opts.time_budget_seconds), prop_(g) {
    const auto gens = generating_sequence(g);
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = i + 1; j < gens.size(); ++j) decisions_.push_back({gens[i], gens[j]});
  }

  SearchResult run() {
    const Elem e = g_.identity();
    bool ok = true;
    for (Elem x = 0; x < g_.order() && ok; ++x)
      ok = prop_.assign(x, x, e) && prop_.assign(e, x, e) && prop_.assign(x, e, e);
    if (ok && prop_.propagate()) descend(0);
    std::sort(result_.stars.begin(), result_.stars.end());
    return std::move(result_);
  }

 private:
  bool stop() {
    if (deadline_.expired()) {
      result_.complete = false;
      return true;
    }
    if (opts_.max_solutions && result_.stars.size() >= *opts_.max_solutions) {
      result_.complete = false;
      return true;
    }
    return false;
  }

  void branch(Elem x, Elem y, std::size_t next) {
    for (Elem v = 0; v < g_.order(); ++v) {
      if (stop()) return;
      ++result_.nodes;
      const std::size_t m = prop_.mark();
      if (prop_.assign(x, y, v) && prop_.propagate() && prop_.jacobi_consistent()) descend(next);
      prop_.undo(m);
    }
  }

  void descend(std::size_t k) {
    if (stop()) return;
    while (k < decisions_.size() &&
           prop_.at(decisions_[k].first, decisions_[k].second) != kUnknown)
      ++k;
    if (k < decisions_.size()) {
      branch(decisions_[k].first, decisions_[k].second, k + 1);
      return;
    }
    if (auto cell = prop_.first_unknown()) {
      const auto n = g_.order();
      branch(static_cast<Elem>(*cell / n), static_cast<Elem>(*cell % n), k);
      return;
    }
    StarTable t = prop_.table();
    if (check_mla_axioms(g_, t).empty()) result_.stars.push_back(std::move(t));
  }

  const GroupTable& g_;
  SearchOptions opts_;
  Deadline deadline_;
  Propagator prop_;
  std::vector<std::pair<Elem, Elem>> decisions_;
  SearchResult result_;
};

}  // namespace

SearchResult enumerate_stars(const GroupTable& g, const SearchOptions& opts) {
  SearchResult r = Search(g, opts).run();
  if (opts.dedup_by_automorphism)
    r.orbits = dedup_stars(g, r.stars, automorphism_group(g, opts.time_budget_seconds));
  return r;
}

std::vector<StarTable> abelian_bracket_oracle(const GroupTable& a) {
  const std::size_t n = a.order();
  std::vector<StarTable> out;
  for (const auto& table : alternating_biadditive_maps(a, a)) {
    std::vector<Elem> flat;
    flat.reserve(n * n);
    for (const auto& row : table) flat.insert(flat.end(), row.begin(), row.end());
    bool jacobi = true;
    for (Elem x = 0; x < n && jacobi; ++x)
      for (Elem y = 0; y < n && jacobi; ++y)
        for (Elem z = 0; z < n && jacobi; ++z) {
          const Elem s = a.mul(a.mul(table[table[x][y]][z], table[table[y][z]][x]),
                               table[table[z][x]][y]);
          jacobi = s == a.identity();
        }
    if (jacobi) out.emplace_back(n, std::move(flat));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Every homomorphism src -> dst whose generator images are drawn from
// candidates[i]; images are extended along right multiplication by the
// generators and rejected on the first inconsistency.
std::vector<std::vector<Elem>> extend_generator_images(
    const GroupTable& src, const GroupTable& dst, const std::vector<Elem>& gens,
    const std::vector<std::vector<Elem>>& candidates, bool bijective, Deadline& deadline) {
  const std::size_t n = src.order();
  std::vector<std::vector<Elem>> out;
  for (const auto& c : candidates)
    if (c.empty()) return out;
  std::vector<std::size_t> pick(gens.size(), 0);
  std::vector<Elem> image(n);
  std::vector<Elem> frontier;
  while (true) {
    if (deadline.expired()) throw Error(ErrorKind::BudgetExceeded, "homomorphism search");
    std::fill(image.begin(), image.end(), kUnknown);
    image[src.identity()] = dst.identity();
    frontier.assign(1, src.identity());
    bool ok = true;
    for (std::size_t f = 0; f < frontier.size() && ok; ++f) {
      const Elem a = frontier[f];
      for (std::size_t i = 0; i < gens.size() && ok; ++i) {
        const Elem b = src.mul(a, gens[i]);
        const Elem v = dst.mul(image[a], candidates[i][pick[i]]);
        if (image[b] == kUnknown) {
          image[b] = v;
          frontier.push_back(b);
        } else {
          ok = image[b] == v;
        }
      }
    }
    if (ok && bijective) {
      std::vector<unsigned char> seen(dst.order(), 0);
      for (Elem a = 0; a < n && ok; ++a) {
        ok = !seen[image[a]];
        seen[image[a]] = 1;
      }
    }
    for (Elem a = 0; a < n && ok; ++a)
      for (Elem b = 0; b < n && ok; ++b)
        ok = image[src.mul(a, b)] == dst.mul(image[a], image[b]);
    if (ok) out.push_back(image);

    std::size_t i = 0;
    while (i < gens.size() && ++pick[i] == candidates[i].size()) pick[i++] = 0;
    if (i == gens.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Automorphism> automorphism_group(const GroupTable& g, double time_budget_seconds) {
  const auto gens = generating_sequence(g);
  std::vector<std::vector<Elem>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (Elem t = 0; t < g.order(); ++t)
      if (g.element_order(t) == g.element_order(gens[i])) candidates[i].push_back(t);
  Deadline deadline(time_budget_seconds);
  return extend_generator_images(g, g, gens, candidates, true, deadline);
}

std::vector<std::vector<Elem>> homomorphisms(const GroupTable& src, const GroupTable& dst,
                                             double time_budget_seconds) {
  const auto gens = generating_sequence(src);
  std::vector<std::vector<Elem>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::size_t d = src.element_order(gens[i]);
    for (Elem t = 0; t < dst.order(); ++t)
      if (d % dst.element_order(t) == 0) candidates[i].push_back(t);
  }
  Deadline deadline(time_budget_seconds);
  return extend_generator_images(src, dst, gens, candidates, false, deadline);
}

StarTable transport_star(const StarTable& star, const Automorphism& pi) {
  const std::size_t n = star.order();
  std::vector<Elem> flat(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) flat[pi[a] * n + pi[b]] = pi[star(a, b)];
  return StarTable(n, std::move(flat));
}

std::vector<Orbit> dedup_stars(const GroupTable& g, const std::vector<StarTable>& stars,
                               const std::vector<Automorphism>& auts) {
  std::map<StarTable, std::size_t> orbits;
  std::set<StarTable> visited;
  for (const auto& s : stars) {
    if (s.order() != g.order()) throw Error(ErrorKind::Format, "star order does not match group");
    if (visited.count(s)) continue;
    std::set<StarTable> orbit;
    for (const auto& pi : auts) orbit.insert(transport_star(s, pi));
    orbit.insert(s);
    visited.insert(orbit.begin(), orbit.end());
    orbits.emplace(*orbit.begin(), orbit.size());
  }
  std::vector<Orbit> out;
  for (auto& [rep, size] : orbits) out.push_back({rep, size});
  return out;
}

}  // namespace mla
