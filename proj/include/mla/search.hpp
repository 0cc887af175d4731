#pragma once

#include <optional>
#include <vector>

#include "mla/star.hpp"

namespace mla {

/// MLA_BUDGET_SECONDS if set and positive, otherwise 60.
double default_budget_seconds();

struct SearchOptions {
  std::optional<std::size_t> max_solutions;  // unlimited when empty
  bool dedup_by_automorphism = false;
  double time_budget_seconds = default_budget_seconds();
};

using Automorphism = std::vector<Elem>;

struct Orbit {
  StarTable representative;  // lexicographically least table in the orbit
  std::size_t size = 0;
};

struct SearchResult {
  std::vector<StarTable> stars;  // sorted, every entry certified
  bool complete = true;          // false on budget exhaustion or max_solutions cut-off
  std::size_t nodes = 0;
  std::vector<Orbit> orbits;     // filled when dedup_by_automorphism is set
};

/// Every star satisfying the five axioms.
///
/// The values s_i * s_j on pairs of a generating sequence are the decision
/// variables (i < j, chronological backtracking). Each assignment is
/// propagated to a fixpoint through the two distributive laws, skew-symmetry
/// and conjugation equivariance; a derived value that disagrees with an
/// existing one prunes the branch, as does a fully known instance of the
/// twisted Jacobi identity that fails. Cells still unknown after all decisions
/// are branched on directly. Completed tables are re-certified with
/// check_mla_axioms before they are emitted.
SearchResult enumerate_stars(const GroupTable& g, const SearchOptions& opts = {});

/// Independent enumeration for abelian groups: alternating biadditive maps
/// built from basis-pair images in coordinates, filtered by the Jacobi
/// identity. Sorted.
std::vector<StarTable> abelian_bracket_oracle(const GroupTable& a);

/// All automorphisms by extending images of a generating sequence.
/// Throws BudgetExceeded when the time budget runs out.
std::vector<Automorphism> automorphism_group(const GroupTable& g,
                                             double time_budget_seconds = default_budget_seconds());

/// All homomorphisms src -> dst as image tables, sorted.
std::vector<std::vector<Elem>> homomorphisms(const GroupTable& src, const GroupTable& dst,
                                             double time_budget_seconds = default_budget_seconds());

// The image of `star` under `pi`: (pi . star)(pi a, pi b) = pi(a * b).
StarTable transport_star(const StarTable& star, const Automorphism& pi);

std::vector<Orbit> dedup_stars(const GroupTable& g, const std::vector<StarTable>& stars,
                               const std::vector<Automorphism>& auts);

}  // namespace mla
