#pragma once

#include <string>
#include <vector>

#include "mla/group.hpp"

namespace mla {

// A candidate binary operation on the elements of a group, as a flat n x n
// index table. Carries no guarantee beyond closure.
class StarTable {
 public:
  StarTable() = default;
  /// Throws NotClosed on the first out-of-range entry (row-major).
  StarTable(std::size_t order, std::vector<Elem> flat);
  static StarTable from_rows(const std::vector<std::vector<Elem>>& rows);
  static StarTable constant(std::size_t order, Elem value);

  std::size_t order() const noexcept { return order_; }
  Elem operator()(Elem a, Elem b) const noexcept { return star_[a * order_ + b]; }
  const std::vector<Elem>& flat() const noexcept { return star_; }
  std::vector<std::vector<Elem>> rows() const;

  friend bool operator==(const StarTable&, const StarTable&) = default;
  friend auto operator<=>(const StarTable& a, const StarTable& b) { return a.star_ <=> b.star_; }

 private:
  std::size_t order_ = 0;
  std::vector<Elem> star_;
};

// One failed quantifier instance. Replaying `witness` through the named
// axiom or identity reproduces left != right.
struct Violation {
  std::string label;
  std::vector<Elem> witness;
  Elem left = 0;
  Elem right = 0;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Exhaustive check of the five axioms (alternating, the two twisted
/// distributive laws, the twisted Jacobi identity, conjugation
/// equivariance). At most one violation per axiom: the first witness in
/// row-major order. Labels: "axiom1" .. "axiom5".
std::vector<Violation> check_mla_axioms(const GroupTable& g, const StarTable& star);

/// The twelve consequences of the axioms ("mla1".."mla5", "lie1".."lie7"),
/// each quantified over every tuple. Must be empty for certified structures.
std::vector<Violation> check_derived_identities(const GroupTable& g, const StarTable& star);

// (a * b)^-1 [a, b]
Elem lie_commutator(const GroupTable& g, const StarTable& star, Elem a, Elem b);

// A group together with a star; `certified()` holds iff the axiom checker
// found no violations when the object was made.
class Mla {
 public:
  /// Runs check_mla_axioms and records the outcome.
  static Mla assess(GroupTable group, StarTable star);
  /// Throws PreconditionFailed with the first violation when the axioms fail.
  static Mla certify(GroupTable group, StarTable star);

  const GroupTable& group() const noexcept { return group_; }
  const StarTable& star() const noexcept { return star_; }
  bool certified() const noexcept { return certified_; }
  const std::vector<Violation>& violations() const noexcept { return violations_; }

  Elem operator()(Elem a, Elem b) const noexcept { return star_(a, b); }

 private:
  Mla(GroupTable g, StarTable s) : group_(std::move(g)), star_(std::move(s)) {}
  GroupTable group_;
  StarTable star_;
  bool certified_ = false;
  std::vector<Violation> violations_;
};

// A certified structure on an abelian group.
class LieRing {
 public:
  /// Throws PreconditionFailed if the group is not abelian or the structure
  /// is not certified.
  explicit LieRing(Mla mla);
  static LieRing trivial(GroupTable group);

  const Mla& mla() const noexcept { return mla_; }
  const GroupTable& group() const noexcept { return mla_.group(); }
  Elem bracket(Elem a, Elem b) const noexcept { return mla_(a, b); }

 private:
  Mla mla_;
};

StarTable trivial_star(const GroupTable& g);
StarTable improper_star(const GroupTable& g);

Mla star_trivial(const GroupTable& g);
Mla star_improper(const GroupTable& g);

}  // namespace mla
