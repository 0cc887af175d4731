#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mla/star.hpp"

namespace mla {

/// Subgroup generated by { a * b : a in A, b in B }.
Subset star_span(const GroupTable& g, const StarTable& star, const Subset& a, const Subset& b);

/// Subgroup generated by { L[a, b] : a in A, b in B }.
Subset lie_span(const GroupTable& g, const StarTable& star, const Subset& a, const Subset& b);

/// Smallest normal subgroup containing S that is closed under g * s and
/// s * g for every g in G.
Subset ideal_closure(const GroupTable& g, const StarTable& star, const Subset& s);

/// First (g, n) with g * n or n * g outside N, or nullopt if N is an ideal.
/// A non-normal N yields the conjugation witness instead.
std::optional<std::vector<Elem>> ideal_witness(const GroupTable& g, const StarTable& star,
                                               const Subset& n);

enum class SeriesKind { GammaDerived, GammaLowerCentral, LieDerived, LieLowerCentral };
std::string to_string(SeriesKind kind);

// Terms are stored until the chain repeats; the repeated term is not stored
// twice. `length` is the solvability / nilpotency class when the chain ends
// in {e}:
//   derived kinds:   smallest n with term n = {e} (term 0 = G)
//   gamma lower:     smallest n with Gamma_(n+1) = {e} (terms[0] = Gamma_(1) = G)
//   lie lower:       smallest n with L_n = {e} (terms[0] = L_0 = G)
struct SeriesReport {
  SeriesKind kind;
  std::vector<Subset> terms;
  bool reaches_identity = false;
  std::optional<int> length;
};

SeriesReport gamma_series(const GroupTable& g, const StarTable& star, bool lower_central);
SeriesReport lie_series(const GroupTable& g, const StarTable& star, bool lower_central);

// MZ(G) = { a : L[a, b] = e for all b }
Subset mz_center(const GroupTable& g, const StarTable& star);
// LZ(G) = { a : a * b = e for all b }
Subset lz_center(const GroupTable& g, const StarTable& star);

/// Star induced on G/N through minimal coset representatives. Throws
/// NotAnIdeal or NotWellDefined with the first witness.
Mla induced_quotient_star(const GroupTable& g, const StarTable& star, const Subset& n);

bool is_trivial_star(const GroupTable& g, const StarTable& star);

/// Pointwise product x * y = (x *1 y)(x *2 y) of two certified structures,
/// after checking exhaustively that both spans are abelian, that every value
/// of one commutes with every value of the other, and the mixed six-factor
/// Jacobi condition. The result is re-certified independently.
/// Throws PreconditionFailed("condition1".."condition3") or TheoremViolated.
Mla combine_structures(const GroupTable& g, const StarTable& first, const StarTable& second);

struct PropertyCheck {
  bool holds = true;
  std::vector<Elem> witness;
};

// The five properties every structure on a class-2 group satisfies.
struct Class2Report {
  PropertyCheck commutator_star_trivial;   // a * b = e on [G, G]
  PropertyCheck star_span_abelian;         // G * G abelian
  PropertyCheck lie_span_abelian;          // subgroup generated by L[x, y] abelian
  PropertyCheck mz_star_central;           // [z, x * y] = e for x, y in MZ(G)
  PropertyCheck star_kills_commutators;    // (x * y) * [u, v] = e

  bool all() const {
    return commutator_star_trivial.holds && star_span_abelian.holds && lie_span_abelian.holds &&
           mz_star_central.holds && star_kills_commutators.holds;
  }
};

/// Throws PreconditionFailed if G is not of class <= 2.
Class2Report class2_property_report(const GroupTable& g, const StarTable& star);

}  // namespace mla
