#include "mla/catalog.hpp"

#include <algorithm>

#include "mla/families.hpp"

namespace mla {

const std::vector<CatalogEntry>& standard_catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> v;
    for (std::size_t n = 1; n <= 32; ++n) v.push_back({"cyclic:" + std::to_string(n), n, true});
    const std::vector<std::pair<std::string, std::size_t>> abelian_products = {
        {"2,2", 4},     {"2,4", 8},   {"2,2,2", 8},   {"3,3", 9},   {"2,6", 12},     {"4,4", 16},
        {"2,8", 16},    {"2,2,4", 16}, {"2,2,2,2", 16}, {"3,6", 18}, {"2,10", 20},   {"2,2,6", 24},
        {"2,12", 24},   {"5,5", 25},  {"3,9", 27},    {"3,3,3", 27}, {"2,14", 28},   {"4,8", 32},
        {"2,16", 32},   {"2,2,8", 32}, {"2,4,4", 32},  {"2,2,2,4", 32}, {"2,2,2,2,2", 32}};
    for (const auto& [p, n] : abelian_products) v.push_back({"abelian:" + p, n, true});
    for (std::size_t n = 3; n <= 16; ++n) v.push_back({"dihedral:" + std::to_string(n), 2 * n, n == 4});
    v.push_back({"quaternion8", 8, true});
    v.push_back({"heisenberg:2", 8, true});
    v.push_back({"heisenberg:3", 27, true});
    v.push_back({"metacyclic:3,2,2,0", 6, false});
    v.push_back({"metacyclic:3,4,2,0", 12, false});
    v.push_back({"metacyclic:8,2,5,0", 16, true});
    v.push_back({"metacyclic:4,4,3,0", 16, true});
    v.push_back({"metacyclic:8,2,3,0", 16, false});
    v.push_back({"metacyclic:8,2,7,4", 16, false});
    v.push_back({"metacyclic:5,4,2,0", 20, false});
    v.push_back({"metacyclic:7,3,2,0", 21, false});
    v.push_back({"metacyclic:9,3,4,0", 27, true});
    v.push_back({"dihedral:3*cyclic:3", 18, false});
    v.push_back({"dihedral:4*cyclic:2", 16, true});
    v.push_back({"quaternion8*cyclic:2", 16, true});
    v.push_back({"dihedral:4*cyclic:4", 32, true});
    v.push_back({"quaternion8*cyclic:4", 32, true});
    v.push_back({"dihedral:4*cyclic:2*cyclic:2", 32, true});
    std::stable_sort(v.begin(), v.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
      return std::tie(a.order, a.name) < std::tie(b.order, b.name);
    });
    return v;
  }();
  return entries;
}

GroupTable build_entry(const CatalogEntry& entry) {
  GroupTable g = construct_standard_group(entry.name);
  if (g.order() != entry.order)
    throw Error(ErrorKind::ConstructionInvalid, entry.name + ": unexpected order");
  if (is_class2(g) != entry.class2)
    throw Error(ErrorKind::ConstructionInvalid, entry.name + ": unexpected class-2 flag");
  return g;
}

std::vector<CatalogEntry> census_catalog() {
  std::vector<CatalogEntry> out;
  for (const auto& e : standard_catalog())
    if (e.order <= 16) out.push_back(e);
  return out;
}

namespace {

std::vector<Json> census_group(const CatalogEntry& entry, const CensusOptions& opts) {
  std::vector<Json> out;
  Json summary;
  summary["group"] = entry.name;
  summary["summary"] = true;
  try {
    const GroupTable g = build_entry(entry);
    SearchOptions so;
    so.time_budget_seconds = opts.budget_seconds;
    const SearchResult r = enumerate_stars(g, so);
    const bool class2 = is_class2(g);
    const StarTable improper = improper_star(g);
    for (const auto& s : r.stars) {
      Json j;
      j["group"] = entry.name;
      j["star"] = s.rows();
      j["class2"] = class2;
      const auto mla = gamma_series(g, s, true);
      const auto lie = lie_series(g, s, true);
      j["mla_nilpotency"] = mla.length ? Json(*mla.length) : Json(nullptr);
      j["lie_nilpotency"] = lie.length ? Json(*lie.length) : Json(nullptr);
      j["is_trivial"] = is_trivial_star(g, s);
      j["is_improper"] = s == improper;
      j["class2_properties"] = class2 ? Json(class2_property_report(g, s).all()) : Json(nullptr);
      out.push_back(std::move(j));
    }
    summary["order"] = g.order();
    summary["class2"] = class2;
    summary["count"] = r.stars.size();
    summary["complete"] = r.complete;
    summary["nodes"] = r.nodes;
  } catch (const std::exception& e) {
    summary["error"] = e.what();
    summary["complete"] = false;
  }
  out.push_back(std::move(summary));
  return out;
}

}  // namespace

std::vector<Json> census(const std::vector<CatalogEntry>& entries, const CensusOptions& opts) {
  std::vector<CatalogEntry> sorted = entries;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const CatalogEntry& a, const CatalogEntry& b) { return a.name < b.name; });
  std::vector<Json> out;
  for (const auto& e : sorted) {
    auto records = census_group(e, opts);
    out.insert(out.end(), std::make_move_iterator(records.begin()),
               std::make_move_iterator(records.end()));
  }
  return out;
}

}  // namespace mla
