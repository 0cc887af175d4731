#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mla/error.hpp"

namespace mla {

// A finite group stored as a validated Cayley table.
//
// Instances are only produced by validate_group (directly or through one of
// the constructors), so every GroupTable is closed, associative, and has a
// located identity and inverse table. Immutable after construction.
class GroupTable {
 public:
  std::size_t order() const noexcept { return order_; }
  const std::string& name() const noexcept { return name_; }
  Elem identity() const noexcept { return identity_; }

  Elem mul(Elem a, Elem b) const noexcept { return mul_[a * order_ + b]; }
  Elem inv(Elem a) const noexcept { return inv_[a]; }

  // ^z x = z x z^-1
  Elem conj(Elem z, Elem x) const noexcept { return mul(mul(z, x), inv(z)); }
  // [x, y] = x y x^-1 y^-1
  Elem comm(Elem x, Elem y) const noexcept {
    return mul(mul(x, y), mul(inv(x), inv(y)));
  }
  Elem power(Elem a, long long k) const;

  std::span<const Elem> flat_table() const noexcept { return mul_; }
  std::vector<std::vector<Elem>> rows() const;

  bool is_abelian() const noexcept;
  std::size_t element_order(Elem a) const;

  void rename(std::string name) { name_ = std::move(name); }

  friend bool operator==(const GroupTable& a, const GroupTable& b) {
    return a.order_ == b.order_ && a.mul_ == b.mul_;
  }

 private:
  friend GroupTable validate_group(const std::vector<std::vector<Elem>>& raw,
                                   std::string name);

  std::string name_;
  std::size_t order_ = 0;
  std::vector<Elem> mul_;
  Elem identity_ = 0;
  std::vector<Elem> inv_;
};

// Membership flags over the elements of a parent group.
class Subset {
 public:
  Subset() = default;
  explicit Subset(std::size_t parent_order) : members_(parent_order, 0) {}
  Subset(std::size_t parent_order, std::initializer_list<Elem> elems);
  Subset(std::size_t parent_order, std::span<const Elem> elems);

  static Subset full(std::size_t parent_order);
  static Subset single(std::size_t parent_order, Elem e);

  std::size_t parent_order() const noexcept { return members_.size(); }
  bool contains(Elem e) const noexcept { return members_[e] != 0; }
  void insert(Elem e) noexcept { members_[e] = 1; }
  void erase(Elem e) noexcept { members_[e] = 0; }
  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }
  std::vector<Elem> elements() const;

  bool is_subset_of(const Subset& other) const noexcept;
  bool is_full() const noexcept { return size() == members_.size(); }

  friend bool operator==(const Subset&, const Subset&) = default;

 private:
  std::vector<unsigned char> members_;
};

// A map between two groups; `image[a]` is the target index of source element a.
struct GroupHom {
  GroupTable source;
  GroupTable target;
  std::vector<Elem> image;

  Elem operator()(Elem a) const { return image[a]; }
  bool is_homomorphism() const;
  Subset kernel() const;
};

/// Validates a raw Cayley table. Checks, in order: closure, associativity,
/// identity, inverses. Throws Error naming the first row-major witness.
GroupTable validate_group(const std::vector<std::vector<Elem>>& raw,
                          std::string name = "");

bool is_subgroup(const GroupTable& g, const Subset& s);
bool is_normal(const GroupTable& g, const Subset& s);

Subset subgroup_closure(const GroupTable& g, const Subset& gens);
Subset normal_closure(const GroupTable& g, const Subset& gens);

Subset center(const GroupTable& g);
Subset derived_subgroup(const GroupTable& g);
// Abelian groups count as class <= 2.
bool is_class2(const GroupTable& g);

// Subgroup generated by all [a, b] with a in A, b in B.
Subset commutator_span(const GroupTable& g, const Subset& a, const Subset& b);

// Greedy generating sequence: scan elements in index order and keep every
// element not already in the span of the previous ones.
std::vector<Elem> generating_sequence(const GroupTable& g);

/// Coset group G/N with its projection. Cosets are ordered by their minimal
/// element index, which is also the representative. Throws NotNormal.
std::pair<GroupTable, GroupHom> quotient(const GroupTable& g, const Subset& n);

// Minimal-index coset representative for each quotient element.
std::vector<Elem> coset_representatives(const GroupHom& projection);

/// The subgroup S as a group in its own right; element i of the result is the
/// i-th smallest member of S. The homomorphism is the inclusion.
std::pair<GroupTable, GroupHom> induced_subgroup(const GroupTable& g, const Subset& s);

/// Componentwise product. Pair (a, b) has index a + |G| * b.
GroupTable direct_product(const GroupTable& g, const GroupTable& h);

}  // namespace mla
