#pragma once

#include <optional>
#include <random>
#include <vector>

#include "mla/star.hpp"

namespace mla {

using Table = std::vector<std::vector<Elem>>;

// Data for an extension of the Lie ring H by the Lie ring K relative to the
// canonical section t(x) = (1, x). Group elements are pairs (h, x) with
// index h + |H| * x.
//
//   sigma[x][k]  sigma_x(k), an automorphism of H
//   gamma[x][k]  Gamma_x(k) = t(x) * k, an endomorphism of H
//   f[x][y]      factor set t(x) t(y) t(xy)^-1
//   h[x][y]      (t(x) * t(y)) t(x * y)^-1
struct ExtensionData {
  LieRing H;
  LieRing K;
  Table sigma;
  Table gamma;
  Table f;
  Table h;
};

/// Checks the map shapes and ranges, that each sigma_x is an automorphism
/// and each gamma_x an endomorphism ("sigma-automorphism",
/// "gamma-endomorphism"), that sigma is an action ("sigma-action"), the
/// normalization and cocycle law of f ("f-normalization", "cocycle") and then
/// the three consequences of the cocycle law on pairs ("lemma1".."lemma3").
/// At most one violation per label.
std::vector<Violation> verify_cocycle(const ExtensionData& e);

/// Checks the compatibility conditions on (sigma, gamma, f, h):
///   "h-normalization"      h(x,1) = h(1,x) = h(x,x) = 1
///   "sigma-fixes-bracket"  sigma_(x * y) fixes h *1 k
///   "left-distributive"    (PQ) * R against ^P(Q * R) (P * R)
///   "right-distributive"   P * (QR) against (P * Q) ^Q(P * R)
///   "conjugation"          ^R(P * Q) against ^R P * ^R Q
///   "jacobi"               the twisted Jacobi product equals 1
/// The last four are evaluated in pair coordinates from the group law and
/// the star formula, quantified over H^3 x K^3 with witness (h, k, l, x, y, z).
std::vector<Violation> verify_star_compatibility(const ExtensionData& e);

/// Group on pairs with (h, x)(k, y) = (h sigma_x(k) f(x, y), xy).
/// Throws PreconditionFailed if verify_cocycle reports anything and
/// ConstructionInvalid if the table is not a group.
GroupTable build_group_from_extension(const ExtensionData& e);

/// The built group with
///   (h, x) * (k, y) = (hk Gamma_x(k) (h *1 k) sigma_(x*y)(h^-1 k^-1 Gamma_y(h^-1)) h(x, y), x *2 y)
/// re-certified by the axiom checker. Throws PreconditionFailed when a
/// verifier reports a violation and TheoremViolated when certification fails.
Mla build_star_from_extension(const ExtensionData& e);

// Alternating biadditive map Q x Q -> A, where Q plays G/[G,G] and A plays [G,G].
struct CentralPairing {
  GroupTable Q;
  GroupTable A;
  Table pairing;
};

/// Labels "alternating", "left-additive", "right-additive".
std::vector<Violation> verify_pairing(const CentralPairing& p);

/// Every alternating biadditive Q x Q -> A, sorted by table.
std::vector<CentralPairing> enumerate_central_pairings(const GroupTable& q, const GroupTable& a);

// G/[G,G] and [G,G] in the layouts central pairings must use.
std::pair<GroupTable, GroupHom> abelianization(const GroupTable& g);
std::pair<GroupTable, GroupHom> commutator_subgroup(const GroupTable& g);

/// a * b = pairing(pi a, pi b) inside [G,G]. Requires G of class <= 2 and a
/// valid pairing (PreconditionFailed); p.Q and p.A must equal abelianization
/// and commutator_subgroup exactly (QuotientMismatch).
Mla central_pairing_to_star(const GroupTable& g, const CentralPairing& p);

/// Reads the pairing off a qualifying star through `transversal` (one
/// element per coset of [G,G], indexed by quotient element; minimal coset
/// representatives by default). Throws PreconditionFailed for uncertified
/// stars or non-class-2 groups, InvalidParameters for a bad transversal and
/// NotCentralType when the quotient structure is nontrivial, [G,G] is not
/// in LZ(G), or a value depends on the representatives.
CentralPairing star_to_central_pairing(const GroupTable& g, const StarTable& star,
                                       const std::optional<std::vector<Elem>>& transversal = {});

// Extension data presenting a class-2 group with a central pairing, plus the
// map (h, x) -> i(h) t(x) from pair indices to elements of G.
struct CentralExtension {
  ExtensionData data;
  std::vector<Elem> to_group;
};

CentralExtension central_extension_data(const GroupTable& g, const CentralPairing& p,
                                        const std::optional<std::vector<Elem>>& transversal = {});

/// Star on a group with cyclic normal H and cyclic G/H, both carrying trivial
/// structures:
///   h t(x) * k t(y) = Gamma_x(k) Gamma_y(h^-1) hmap(x, y)
/// with t the minimal coset representatives. gammas[x] is an endomorphism of
/// H and hmap[x][y] an element of H, both in induced_subgroup(G, H) indices,
/// x and y in quotient(G, H) indices. Conditions "a".."d" are checked over
/// every tuple together with the cocycle law and the normalization of hmap.
/// Throws PreconditionFailed, ConditionFailed or TheoremViolated.
Mla metacyclic_star(const GroupTable& g, const Subset& h, const Table& gammas, const Table& hmap);

struct RandomExtensionStats {
  std::size_t attempts = 0;
  std::size_t rejected = 0;
};

/// Draws verified extension data: H in {C2, C3, C4, C2xC2, C5}, K a small
/// abelian group, brackets from abelian_bracket_oracle, sigma a homomorphism
/// K -> Aut(H), f trivial or biadditive, gamma trivial, a power of
/// sigma - id, or random endomorphisms, h an alternating biadditive map or a
/// power of f - f^T. Draws failing either verifier are discarded; returns
/// nullopt after `max_attempts` rejections.
std::optional<ExtensionData> random_extension_data(std::mt19937_64& rng,
                                                   std::size_t max_attempts = 10000,
                                                   RandomExtensionStats* stats = nullptr);

}  // namespace mla
