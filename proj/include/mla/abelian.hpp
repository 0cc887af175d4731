#pragma once

#include <optional>
#include <vector>

#include "mla/group.hpp"

namespace mla {

// Coordinates of a finite abelian group against a basis b_1..b_k with
// orders d_1..d_k, so that every element is uniquely sum c_i b_i with
// 0 <= c_i < d_i. Found by brute force over basis tuples (small groups only).
class AbelianBasis {
 public:
  /// Throws PreconditionFailed if `g` is not abelian.
  explicit AbelianBasis(const GroupTable& g);

  const std::vector<Elem>& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& orders() const noexcept { return orders_; }
  std::size_t rank() const noexcept { return basis_.size(); }

  const std::vector<std::size_t>& coords(Elem a) const { return coords_[a]; }
  Elem element(const std::vector<std::size_t>& coords) const;
  // k * a in additive notation.
  Elem scale(Elem a, long long k) const;

 private:
  const GroupTable* group_;
  std::vector<Elem> basis_;
  std::vector<std::size_t> orders_;
  std::vector<std::vector<std::size_t>> coords_;
};

/// All alternating biadditive maps B: Q x Q -> A written as tables
/// table[x][y] (indices into A). Values on basis pairs i < j range over
/// the elements of A killed by gcd(d_i, d_j); the rest follows from
/// biadditivity. Each result is re-verified exhaustively.
std::vector<std::vector<std::vector<Elem>>> alternating_biadditive_maps(const GroupTable& q,
                                                                        const GroupTable& a);

/// All biadditive maps Q x Q -> A (not necessarily alternating); used for
/// building factor sets of central extensions.
std::vector<std::vector<std::vector<Elem>>> biadditive_maps(const GroupTable& q,
                                                            const GroupTable& a);

}  // namespace mla
