#include <doctest.h>

#include <set>

#include "mla/families.hpp"
#include "support.hpp"
#include "testing.hpp"

using namespace mla;

namespace {

ExtensionData split_data(const GroupTable& H, const GroupTable& K) {
  Table sigma(K.order(), std::vector<Elem>(H.order()));
  for (auto& row : sigma)
    for (Elem k = 0; k < H.order(); ++k) row[k] = k;
  return {LieRing::trivial(H), LieRing::trivial(K), sigma, oracle::zero_table(K.order(), H.order()),
          oracle::zero_table(K.order(), K.order()), oracle::zero_table(K.order(), K.order())};
}

bool has_label(const std::vector<Violation>& v, const std::string& label) {
  return std::any_of(v.begin(), v.end(), [&](const Violation& x) { return x.label == label; });
}

}  // namespace

TEST_SUITE("extension") {

TEST_CASE("cocycle verification") {
  CHECK(verify_cocycle(split_data(cyclic(3), cyclic(2))).empty());
  CHECK(verify_cocycle(oracle::heisenberg_data(oracle::zero_table(9, 9))).empty());
  CHECK(verify_cocycle(oracle::c5_by_c4_data()).empty());

  // one corrupted entry of f away from the normalized row and column
  ExtensionData bad = oracle::heisenberg_data(oracle::zero_table(9, 9));
  const Elem a = 4, b = 5;
  bad.f[a][b] = (bad.f[a][b] + 1) % 3;
  const auto v = verify_cocycle(bad);
  REQUIRE(has_label(v, "cocycle"));
  const Violation& c = *std::find_if(v.begin(), v.end(), [](const Violation& x) { return x.label == "cocycle"; });
  REQUIRE(c.witness.size() == 3);
  const GroupTable K = abelian({3, 3});
  const Elem x = c.witness[0], y = c.witness[1], z = c.witness[2];
  const bool touches = (x == a && y == b) || (K.mul(x, y) == a && z == b) || (y == a && z == b) ||
                       (x == a && K.mul(y, z) == b);
  CHECK(touches);

  ExtensionData notaut = split_data(cyclic(3), cyclic(2));
  notaut.sigma[1] = {0, 0, 0};
  CHECK(has_label(verify_cocycle(notaut), "sigma-automorphism"));

  ExtensionData notaction = split_data(cyclic(3), cyclic(2));
  notaction.sigma[0] = {0, 2, 1};
  CHECK(has_label(verify_cocycle(notaction), "sigma-action"));

  ExtensionData unnormalized = split_data(cyclic(3), cyclic(2));
  unnormalized.f[0][1] = 1;
  CHECK(has_label(verify_cocycle(unnormalized), "f-normalization"));

  ExtensionData notendo = split_data(cyclic(3), cyclic(2));
  notendo.gamma[1] = {0, 1, 1};
  CHECK(has_label(verify_cocycle(notendo), "gamma-endomorphism"));
}

TEST_CASE("compatibility verification") {
  CHECK(verify_star_compatibility(split_data(cyclic(4), abelian({2, 2}))).empty());
  for (Elem c = 0; c < 3; ++c)
    CHECK(verify_star_compatibility(oracle::heisenberg_data(oracle::heisenberg_pairing(c))).empty());

  // break biadditivity of h in the second argument on the central case
  mla::Table h = oracle::heisenberg_pairing(1);
  h[1][3] = (h[1][3] + 1) % 3;
  h[3][1] = (3 - h[1][3]) % 3;
  const auto v = verify_star_compatibility(oracle::heisenberg_data(h));
  CHECK(has_label(v, "right-distributive"));
  for (const auto& x : v) CHECK(x.witness.size() == (x.label == "h-normalization" ? 2u : 6u));

  mla::Table diag = oracle::zero_table(9, 9);
  diag[4][4] = 1;
  CHECK(has_label(verify_star_compatibility(oracle::heisenberg_data(diag)), "h-normalization"));

  ExtensionData broken = split_data(cyclic(3), cyclic(2));
  broken.f[1][1] = 2;
  broken.f[0][1] = 1;
  CHECK(expect_error([&] { verify_star_compatibility(broken); }).kind() ==
        ErrorKind::PreconditionFailed);
}

TEST_CASE("group construction") {
  CHECK(build_group_from_extension(split_data(cyclic(3), cyclic(4))) ==
        direct_product(cyclic(3), cyclic(4)));

  const GroupTable g = build_group_from_extension(oracle::heisenberg_data(oracle::zero_table(9, 9)));
  const GroupTable ref = heisenberg(3);
  CHECK(g.order() == 27);
  CHECK(is_class2(g));
  CHECK(center(g).size() == 3);
  CHECK(derived_subgroup(g) == center(g));
  CHECK(!g.is_abelian());
  for (Elem x = 0; x < 27; ++x) CHECK(g.element_order(x) == (x == 0 ? 1u : 3u));
  CHECK(center(ref).size() == center(g).size());

  CHECK(build_group_from_extension(oracle::c5_by_c4_data()) == metacyclic(5, 4, 2, 0));

  ExtensionData bad = split_data(cyclic(3), cyclic(2));
  bad.sigma[1] = {0, 0, 0};
  CHECK(expect_error([&] { build_group_from_extension(bad); }).kind() == ErrorKind::PreconditionFailed);
}

TEST_CASE("star construction") {
  {
    const Mla m = build_star_from_extension(split_data(cyclic(2), cyclic(3)));
    CHECK(m.certified());
    CHECK(m.star() == trivial_star(m.group()));
  }
  {
    const Mla m = build_star_from_extension(oracle::c5_by_c4_data());
    CHECK(!m.group().is_abelian());
    CHECK(m.star() == trivial_star(m.group()));
  }
  // one nonzero pairing is the commutator pairing, the other is not
  std::size_t improper = 0;
  for (Elem c = 1; c < 3; ++c) {
    const Mla m = build_star_from_extension(oracle::heisenberg_data(oracle::heisenberg_pairing(c)));
    CHECK(m.certified());
    CHECK(!is_trivial_star(m.group(), m.star()));
    improper += m.star() == improper_star(m.group());
    CHECK(check_derived_identities(m.group(), m.star()).empty());
  }
  CHECK(improper == 1);
}

TEST_CASE("random extension data") {
  std::mt19937_64 rng(7);
  RandomExtensionStats stats;
  for (int i = 0; i < 10; ++i) {
    const auto data = random_extension_data(rng, 10000, &stats);
    REQUIRE(data.has_value());
    CHECK(verify_cocycle(*data).empty());
    CHECK(verify_star_compatibility(*data).empty());
    const Mla m = build_star_from_extension(*data);
    CHECK(m.certified());
  }
  CHECK(stats.attempts >= 10);

  std::mt19937_64 r1(99), r2(99);
  const auto d1 = random_extension_data(r1);
  const auto d2 = random_extension_data(r2);
  REQUIRE(d1.has_value());
  REQUIRE(d2.has_value());
  CHECK(d1->f == d2->f);
  CHECK(d1->h == d2->h);
  CHECK(d1->sigma == d2->sigma);
  CHECK(d1->gamma == d2->gamma);
}

TEST_CASE("central pairings") {
  CHECK(enumerate_central_pairings(abelian({3, 3}), cyclic(3)).size() == 3);
  for (std::size_t n : {2u, 3u, 4u, 6u}) CHECK(enumerate_central_pairings(cyclic(n), cyclic(4)).size() == 1);

  const auto v = enumerate_central_pairings(abelian({2, 2}), cyclic(4));
  CHECK(v.size() == 2);
  for (const auto& p : v) {
    CHECK(verify_pairing(p).empty());
    CHECK(p.pairing[1][2] % 2 == 0);
  }

  CentralPairing bad{abelian({2, 2}), cyclic(4), oracle::zero_table(4, 4)};
  bad.pairing[1][1] = 2;
  CHECK(has_label(verify_pairing(bad), "alternating"));
  CentralPairing notadd{abelian({2, 2}), cyclic(4), oracle::zero_table(4, 4)};
  notadd.pairing[1][2] = 1;
  notadd.pairing[2][1] = 3;
  const auto nv = verify_pairing(notadd);
  CHECK((has_label(nv, "left-additive") || has_label(nv, "right-additive")));
}

TEST_CASE("central pairing to star and back") {
  const GroupTable h = heisenberg(3);
  const auto [q, pi] = abelianization(h);
  const auto [a, incl] = commutator_subgroup(h);
  const auto pairings = enumerate_central_pairings(q, a);
  REQUIRE(pairings.size() == 3);
  for (const auto& p : pairings) {
    const Mla m = central_pairing_to_star(h, p);
    CHECK(m.certified());
    CHECK(star_to_central_pairing(h, m.star()).pairing == p.pairing);
    const bool zero = p.pairing == oracle::zero_table(q.order(), q.order());
    CHECK(is_trivial_star(h, m.star()) == zero);
  }

  // the improper star reads off the commutators of representatives
  const CentralPairing imp = star_to_central_pairing(h, improper_star(h));
  const auto reps = coset_representatives(pi);
  for (Elem x = 0; x < q.order(); ++x)
    for (Elem y = 0; y < q.order(); ++y) CHECK(incl(imp.pairing[x][y]) == h.comm(reps[x], reps[y]));
  CHECK(is_trivial_star(q, induced_quotient_star(h, improper_star(h), derived_subgroup(h)).star()));

  CentralPairing wrong = pairings[0];
  wrong.Q = abelian({9});
  CHECK(expect_error([&] { central_pairing_to_star(h, wrong); }).kind() == ErrorKind::QuotientMismatch);

  const GroupTable s3 = metacyclic(3, 2, 2, 0);
  CHECK(expect_error([&] { star_to_central_pairing(s3, trivial_star(s3)); }).kind() ==
        ErrorKind::PreconditionFailed);

  const GroupTable v = abelian({2, 2});
  const StarTable nontrivial = oracle::klein_brackets().back();
  const Error nc = expect_error([&] { star_to_central_pairing(v, nontrivial); });
  CHECK(nc.kind() == ErrorKind::NotCentralType);
  CHECK(nc.label() == "quotient structure nontrivial");

  std::vector<Elem> short_t = {0, 1};
  CHECK(expect_error([&] { star_to_central_pairing(h, improper_star(h), short_t); }).kind() ==
        ErrorKind::InvalidParameters);
}

TEST_CASE("central extension data reproduces the central star") {
  for (const GroupTable& g : {heisenberg(3), dihedral(4), quaternion8()}) {
    CAPTURE(g.name());
    const auto q = abelianization(g).first;
    const auto a = commutator_subgroup(g).first;
    for (const auto& p : enumerate_central_pairings(q, a)) {
      const Mla direct = central_pairing_to_star(g, p);
      const CentralExtension ce = central_extension_data(g, p);
      const Mla built = build_star_from_extension(ce.data);
      const auto& t = ce.to_group;
      REQUIRE(t.size() == g.order());
      CHECK(std::set<Elem>(t.begin(), t.end()).size() == g.order());
      bool same = true;
      for (Elem u = 0; u < g.order(); ++u)
        for (Elem w = 0; w < g.order(); ++w) {
          same = same && t[built.group().mul(u, w)] == g.mul(t[u], t[w]);
          same = same && t[built(u, w)] == direct(t[u], t[w]);
        }
      CHECK(same);
    }
  }
}

TEST_CASE("metacyclic stars") {
  // S3: hmap is forced to 1; with trivial gamma only the trivial star remains
  const GroupTable s3 = metacyclic(3, 2, 2, 0);
  const Subset a3(6, {0, 1, 2});
  CHECK(metacyclic_star(s3, a3, oracle::zero_table(2, 3), oracle::zero_table(2, 2)).star() ==
        trivial_star(s3));
  std::vector<StarTable> s3_stars;
  for (Elem c0 = 0; c0 < 3; ++c0)
    for (Elem c1 = 0; c1 < 3; ++c1) {
      const mla::Table gammas = {{0, c0, Elem(2 * c0 % 3)}, {0, c1, Elem(2 * c1 % 3)}};
      try {
        s3_stars.push_back(metacyclic_star(s3, a3, gammas, oracle::zero_table(2, 2)).star());
        CHECK(c0 == 0);
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ConditionFailed);
      }
    }
  std::sort(s3_stars.begin(), s3_stars.end());
  CHECK(s3_stars == enumerate_stars(s3).stars);

  // C5 x| C4: accepted gammas give exactly the enumerated structures
  const GroupTable m = metacyclic(5, 4, 2, 0);
  const Subset h5(20, {0, 1, 2, 3, 4});
  std::vector<StarTable> accepted;
  std::size_t rejected = 0;
  for (int code = 0; code < 625; ++code) {
    mla::Table gammas(4, std::vector<Elem>(5));
    for (int x = 0, c = code; x < 4; ++x, c /= 5)
      for (Elem k = 0; k < 5; ++k) gammas[x][k] = static_cast<Elem>((c % 5) * k % 5);
    try {
      const Mla s = metacyclic_star(m, h5, gammas, oracle::zero_table(4, 4));
      CHECK(check_mla_axioms(m, s.star()).empty());
      accepted.push_back(s.star());
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ConditionFailed);
      ++rejected;
    }
  }
  std::sort(accepted.begin(), accepted.end());
  accepted.erase(std::unique(accepted.begin(), accepted.end()), accepted.end());
  CHECK(accepted == enumerate_stars(m).stars);
  CHECK(rejected > 0);

  const GroupTable d4 = dihedral(4);
  CHECK(expect_error([&] {
          metacyclic_star(d4, Subset(8, {0, 4}), oracle::zero_table(4, 2), oracle::zero_table(4, 4));
        }).kind() == ErrorKind::PreconditionFailed);
  CHECK(expect_error([&] {
          metacyclic_star(abelian({2, 2, 2}), Subset(8, {0, 1}), oracle::zero_table(4, 2),
                          oracle::zero_table(4, 4));
        }).kind() == ErrorKind::PreconditionFailed);
}

}  // TEST_SUITE
