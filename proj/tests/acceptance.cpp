// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "mla/catalog.hpp"
#include "mla/extension.hpp"
#include "mla/families.hpp"
#include "mla/search.hpp"
#include "mla/structure.hpp"
#include "support.hpp"

using namespace mla;

namespace {

// Every certified structure seen during the run, for the identity suite.
class Registry {
 public:
  void add(const GroupTable& g, const StarTable& s) {
    for (auto& [group, stars] : entries_)
      if (group == g) {
        stars.insert(s);
        return;
      }
    entries_.push_back({g, {s}});
  }
  template <class F>
  void for_each(F&& f) const {
    for (const auto& [group, stars] : entries_)
      for (const auto& s : stars) f(group, s);
  }
  std::size_t groups() const { return entries_.size(); }

 private:
  std::vector<std::pair<GroupTable, std::set<StarTable>>> entries_;
};

Registry registry;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  std::function<Outcome()> run;
  Outcome result;
  double seconds = 0;
};

// Failure details collected inside a criterion; the first few are shown.
class Failures {
 public:
  void add(const std::string& what) {
    if (++count_ <= 3) shown_ += (shown_.empty() ? "" : "; ") + what;
  }
  bool empty() const { return count_ == 0; }
  std::string text() const { return std::to_string(count_) + " failures: " + shown_; }

 private:
  std::size_t count_ = 0;
  std::string shown_;
};

Outcome finish(const Failures& f, const std::string& summary) {
  return {f.empty(), f.empty() ? summary : f.text()};
}

std::vector<GroupTable> catalog_up_to(std::size_t order, bool class2_only) {
  std::vector<GroupTable> out;
  for (const auto& e : standard_catalog())
    if (e.order <= order && (!class2_only || e.class2)) out.push_back(build_entry(e));
  return out;
}

// Complete enumerations of the class-2 catalog groups of order <= 16.
const std::vector<std::pair<GroupTable, SearchResult>>& class2_enumerations() {
  static const auto data = [] {
    std::vector<std::pair<GroupTable, SearchResult>> out;
    for (const GroupTable& g : catalog_up_to(16, true)) {
      SearchOptions o;
      o.time_budget_seconds = 600;
      out.emplace_back(g, enumerate_stars(g, o));
      for (const auto& s : out.back().second.stars) registry.add(g, s);
    }
    return out;
  }();
  return data;
}

const Subset& term(const SeriesReport& r, std::size_t i) {
  return r.terms[std::min(i, r.terms.size() - 1)];
}

std::string join_names(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ", ") + x;
  return s;
}

Outcome axiom_soundness() {
  Failures f;
  std::size_t groups = 0;
  for (const GroupTable& g : catalog_up_to(32, false)) {
    ++groups;
    for (const StarTable& s : {trivial_star(g), improper_star(g)}) {
      const auto v = check_mla_axioms(g, s);
      if (!v.empty()) f.add(g.name() + " " + v[0].label);
      else registry.add(g, s);
    }
  }
  return finish(f, std::to_string(groups) + " catalog groups, trivial and improper stars certified");
}

Outcome identity_suite() {
  Failures f;
  std::size_t n = 0;
  registry.for_each([&](const GroupTable& g, const StarTable& s) {
    ++n;
    const auto v = check_derived_identities(g, s);
    if (!v.empty()) f.add(g.name() + " " + v[0].label);
  });
  return finish(f, std::to_string(n) + " certified structures on " + std::to_string(registry.groups()) +
                       " groups, 12 identities each, no violations");
}

Outcome class2_properties() {
  Failures f;
  std::size_t n = 0;
  std::vector<std::string> incomplete;
  for (const auto& [g, r] : class2_enumerations()) {
    if (!r.complete) incomplete.push_back(g.name());
    for (const auto& s : r.stars) {
      ++n;
      if (!class2_property_report(g, s).all()) f.add(g.name());
    }
  }
  if (!incomplete.empty()) f.add("incomplete enumeration on " + join_names(incomplete));
  return finish(f, std::to_string(n) + " structures on " + std::to_string(class2_enumerations().size()) +
                       " class-2 groups, all five properties hold");
}

Outcome lie_nilpotency() {
  Failures f;
  std::size_t nilpotent = 0, checks = 0;
  for (const auto& [g, r] : class2_enumerations())
    for (const auto& s : r.stars) {
      const SeriesReport gamma = gamma_series(g, s, true);
      const SeriesReport lie = lie_series(g, s, true);
      if (!gamma.reaches_identity) continue;
      ++nilpotent;
      if (!lie.reaches_identity) f.add(g.name() + " not Lie nilpotent");
      const std::size_t depth = std::max(gamma.terms.size(), lie.terms.size()) + 1;
      for (std::size_t k = 1; k <= depth; ++k, ++checks)
        if (!term(lie, k).is_subset_of(term(gamma, k - 1)))
          f.add(g.name() + " L_" + std::to_string(k) + " not in Gamma_(" + std::to_string(k) + ")");
    }
  return finish(f, std::to_string(nilpotent) + " nilpotent structures are Lie nilpotent, " +
                       std::to_string(checks) + " containments checked");
}

Outcome commutator_containment() {
  Failures f;
  std::size_t checks = 0;
  for (const auto& [g, r] : class2_enumerations()) {
    const Subset all = Subset::full(g.order());
    for (const auto& s : r.stars) {
      const SeriesReport gamma = gamma_series(g, s, true);
      const SeriesReport lie = lie_series(g, s, true);
      const std::size_t depth = std::max(gamma.terms.size(), lie.terms.size()) + 1;
      for (std::size_t k = 1; k <= depth; ++k, ++checks)
        if (!commutator_span(g, all, term(lie, k)).is_subset_of(term(gamma, k)))
          f.add(g.name() + " n=" + std::to_string(k));
    }
  }
  return finish(f, std::to_string(checks) + " containments checked");
}

Outcome combination() {
  Failures f;
  std::size_t pairs = 0, eligible = 0;
  for (const GroupTable& g : {dihedral(4), quaternion8()}) {
    const SearchResult r = enumerate_stars(g);
    if (!r.complete) f.add(g.name() + " enumeration incomplete");
    for (const auto& a : r.stars)
      for (const auto& b : r.stars) {
        ++pairs;
        try {
          const Mla m = combine_structures(g, a, b);
          ++eligible;
          if (!m.certified()) f.add(g.name() + " uncertified");
          else registry.add(g, m.star());
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::PreconditionFailed) f.add(g.name() + " " + e.what());
        }
      }
  }
  return finish(f, std::to_string(eligible) + " of " + std::to_string(pairs) +
                       " ordered pairs on D4 and Q8 meet the conditions, all combinations certify");
}

Outcome oracle_equivalence() {
  Failures f;
  std::string counts;
  for (const char* spec : {"cyclic:2", "cyclic:3", "cyclic:4", "abelian:2,2", "cyclic:5", "cyclic:6",
                           "abelian:2,4", "abelian:3,3"}) {
    const GroupTable g = construct_standard_group(spec);
    const SearchResult r = enumerate_stars(g);
    const auto o = abelian_bracket_oracle(g);
    if (!r.complete) f.add(std::string(spec) + " incomplete");
    if (r.stars != o) f.add(std::string(spec) + " differs");
    for (const auto& s : r.stars) registry.add(g, s);
    counts += (counts.empty() ? "" : " ") + std::string(spec) + "=" + std::to_string(o.size());
  }
  return finish(f, "search and oracle agree: " + counts);
}

Outcome forced_counts() {
  Failures f;
  for (std::size_t n = 1; n <= 12; ++n) {
    const GroupTable g = cyclic(n);
    const SearchResult r = enumerate_stars(g);
    if (!r.complete || r.stars.size() != 1) f.add(g.name());
  }
  std::size_t nonabelian = 0;
  for (const GroupTable& g : catalog_up_to(32, false)) {
    if (g.is_abelian()) continue;
    ++nonabelian;
    // two distinct certified structures suffice; the search stops there
    SearchOptions o;
    o.max_solutions = 2;
    const SearchResult r = enumerate_stars(g, o);
    if (r.stars.size() < 2) f.add(g.name());
    for (const auto& s : r.stars) registry.add(g, s);
  }
  return finish(f, "12 cyclic groups with exactly one structure, " + std::to_string(nonabelian) +
                       " nonabelian groups with at least two");
}

Outcome extension_theorem() {
  Failures f;
  std::mt19937_64 rng(20240601);
  RandomExtensionStats stats;
  std::size_t nonabelian = 0, nontrivial = 0;
  for (int i = 0; i < 100; ++i) {
    const auto data = random_extension_data(rng, 10000, &stats);
    if (!data) {
      f.add("generator gave up");
      break;
    }
    try {
      const Mla m = build_star_from_extension(*data);
      validate_group(m.group().rows());
      if (!check_mla_axioms(m.group(), m.star()).empty()) f.add("instance " + std::to_string(i));
      registry.add(m.group(), m.star());
      nonabelian += !m.group().is_abelian();
      nontrivial += !is_trivial_star(m.group(), m.star());
    } catch (const Error& e) {
      f.add(std::string(to_string(e.kind())) + " on instance " + std::to_string(i));
    }
  }
  return finish(f, "100 instances from " + std::to_string(stats.attempts) + " draws, " +
                       std::to_string(nonabelian) + " nonabelian groups, " + std::to_string(nontrivial) +
                       " nontrivial stars, no TheoremViolated");
}

// Minimal, maximal and second-smallest coset members (where they exist).
std::vector<std::vector<Elem>> transversals(const GroupTable& g, const GroupHom& pi, std::size_t q) {
  std::vector<std::vector<Elem>> cosets(q);
  for (Elem z = 0; z < g.order(); ++z) cosets[pi(z)].push_back(z);
  std::vector<std::vector<Elem>> out(3, std::vector<Elem>(q));
  for (std::size_t x = 0; x < q; ++x) {
    out[0][x] = cosets[x].front();
    out[1][x] = cosets[x].back();
    out[2][x] = cosets[x][std::min<std::size_t>(1, cosets[x].size() - 1)];
  }
  if (q > 0) out[2][0] = cosets[0].front();
  return out;
}

Outcome pairing_round_trip() {
  Failures f;
  std::size_t pairings = 0, distinct_sections = 0;
  std::vector<GroupTable> groups = {heisenberg(3)};
  for (const auto& e : standard_catalog())
    if (e.order == 16 && e.class2) groups.push_back(build_entry(e));
  for (const GroupTable& g : groups) {
    const auto [q, pi] = abelianization(g);
    const auto [a, incl] = commutator_subgroup(g);
    auto ts = transversals(g, pi, q.order());
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    if (a.order() > 1 && ts.size() != 3) f.add(g.name() + " has fewer than 3 transversals");
    if (ts.size() == 3) ++distinct_sections;
    for (const auto& p : enumerate_central_pairings(q, a)) {
      ++pairings;
      try {
        const Mla m = central_pairing_to_star(g, p);
        registry.add(g, m.star());
        for (const auto& t : ts)
          if (star_to_central_pairing(g, m.star(), t).pairing != p.pairing) f.add(g.name());
      } catch (const Error& e) {
        f.add(g.name() + " " + e.what());
      }
    }
  }
  return finish(f, std::to_string(pairings) + " pairings on " + std::to_string(groups.size()) +
                       " groups round-trip; " + std::to_string(distinct_sections) +
                       " nonabelian groups checked under 3 transversals (abelian groups admit one)");
}

Outcome heisenberg_reconstruction() {
  Failures f;
  const GroupTable built = build_group_from_extension(oracle::heisenberg_data(oracle::zero_table(9, 9)));
  const GroupTable ref = heisenberg(3);
  auto invariants = [](const GroupTable& g) {
    std::map<std::size_t, std::size_t> orders;
    for (Elem x = 0; x < g.order(); ++x) ++orders[g.element_order(x)];
    std::ostringstream os;
    os << g.order() << " " << is_class2(g) << " " << center(g).size() << " "
       << (derived_subgroup(g) == center(g)) << " " << g.is_abelian();
    for (auto [k, v] : orders) os << " " << k << ":" << v;
    return os.str();
  };
  if (built.order() != 27) f.add("order");
  if (!is_class2(built)) f.add("not class 2");
  if (center(built).size() != 3) f.add("center");
  if (!(derived_subgroup(built) == center(built))) f.add("[G,G] != Z(G)");
  if (invariants(built) != invariants(ref)) f.add("invariants differ from heisenberg:3");
  bool iso = false;
  for (const auto& hom : homomorphisms(built, ref))
    iso = iso || std::set<Elem>(hom.begin(), hom.end()).size() == 27;
  if (!iso) f.add("no isomorphism to heisenberg:3");
  registry.add(built, trivial_star(built));
  registry.add(built, improper_star(built));
  return finish(f, "order 27, class 2, |Z| = 3, [G,G] = Z(G), isomorphic to heisenberg:3");
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "axiom soundness", axiom_soundness},
      {3, "class-2 properties", class2_properties},
      {4, "Lie nilpotency on class-2 groups", lie_nilpotency},
      {5, "commutator containment", commutator_containment},
      {6, "combination", combination},
      {7, "oracle equivalence", oracle_equivalence},
      {8, "forced counts", forced_counts},
      {9, "extension construction", extension_theorem},
      {10, "central pairing round trip", pairing_round_trip},
      {11, "heisenberg reconstruction", heisenberg_reconstruction},
      // last, so that it sees every structure certified above
      {2, "identity suite", identity_suite},
  };
  bool all = true;
  for (auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.result = c.run();
    } catch (const std::exception& e) {
      c.result = {false, std::string("exception: ") + e.what()};
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    all = all && c.result.pass;
  }
  std::sort(criteria.begin(), criteria.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  for (const auto& c : criteria)
    std::printf("%s %2d %s: %s (%.1f s)\n", c.result.pass ? "PASS" : "FAIL", c.id, c.title.c_str(),
                c.result.detail.c_str(), c.seconds);
  std::fflush(stdout);
  return all ? 0 : 1;
}
