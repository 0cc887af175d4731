#pragma once

#include <string>
#include <vector>

#include "mla/io.hpp"

namespace mla {

struct CatalogEntry {
  std::string name;  // family spec, also used as the group name
  std::size_t order;
  bool class2;
};

/// Standard groups up to order 32: cyclic groups, abelian products, dihedral
/// groups up to order 32, quaternion8, heisenberg(2), heisenberg(3) and a
/// few metacyclic and product groups. Sorted by (order, name).
const std::vector<CatalogEntry>& standard_catalog();

/// Builds the entry and checks its order and class-2 flag
/// (ConstructionInvalid on mismatch).
GroupTable build_entry(const CatalogEntry& entry);

// Entries of order <= 16: the default census catalog.
std::vector<CatalogEntry> census_catalog();

struct CensusOptions {
  double budget_seconds = default_budget_seconds();
};

/// One JSON record per (group, structure), then a summary record per group
/// ({"group", "summary": true, "count", "complete", ...}). Records are sorted
/// by group name and star table. A group whose construction or search throws
/// gets a summary carrying "error" and the run continues.
std::vector<Json> census(const std::vector<CatalogEntry>& entries, const CensusOptions& opts = {});

}  // namespace mla
