#include "mla/extension.hpp"

#include <algorithm>

#include "mla/abelian.hpp"
#include "mla/families.hpp"
#include "mla/search.hpp"
#include "mla/structure.hpp"

namespace mla {

namespace {

using Found = std::optional<Violation>;

Violation make(std::string label, std::vector<Elem> witness, Elem left, Elem right) {
  return Violation{std::move(label), std::move(witness), left, right};
}

void push(std::vector<Violation>& out, Found v) {
  if (v) out.push_back(std::move(*v));
}

void require_table(const Table& t, std::size_t rows, std::size_t cols, std::size_t bound,
                   const char* what) {
  if (t.size() != rows) throw Error(ErrorKind::Format, std::string(what) + " has wrong shape");
  for (const auto& row : t) {
    if (row.size() != cols) throw Error(ErrorKind::Format, std::string(what) + " has wrong shape");
    for (Elem v : row)
      if (v >= bound) throw Error(ErrorKind::Format, std::string(what) + " value out of range");
  }
}

void require_shapes(const ExtensionData& e) {
  const std::size_t nh = e.H.group().order(), nk = e.K.group().order();
  require_table(e.sigma, nk, nh, nh, "sigma");
  require_table(e.gamma, nk, nh, nh, "gamma");
  require_table(e.f, nk, nk, nh, "f");
  require_table(e.h, nk, nk, nh, "h");
}

// Arithmetic on pairs (h, x) straight from the extension data.
class PairOps {
 public:
  explicit PairOps(const ExtensionData& e)
      : e_(e), H_(e.H.group()), K_(e.K.group()), nh_(H_.order()), sigma_inv_(e.sigma.size()) {
    for (std::size_t x = 0; x < e.sigma.size(); ++x) {
      sigma_inv_[x].assign(nh_, 0);
      for (Elem k = 0; k < nh_; ++k) sigma_inv_[x][e.sigma[x][k]] = k;
    }
  }

  Elem pack(Elem h, Elem x) const { return h + static_cast<Elem>(nh_) * x; }
  Elem hpart(Elem p) const { return p % nh_; }
  Elem kpart(Elem p) const { return p / nh_; }

  Elem hm(Elem a, Elem b) const { return H_.mul(a, b); }
  Elem hi(Elem a) const { return H_.inv(a); }
  Elem sig(Elem x, Elem k) const { return e_.sigma[x][k]; }
  Elem gam(Elem x, Elem k) const { return e_.gamma[x][k]; }

  Elem mul(Elem p, Elem q) const {
    const Elem h = hpart(p), x = kpart(p), k = hpart(q), y = kpart(q);
    return pack(hm(hm(h, sig(x, k)), e_.f[x][y]), K_.mul(x, y));
  }

  Elem inv(Elem p) const {
    const Elem h = hpart(p), x = kpart(p), xi = K_.inv(x);
    return pack(sigma_inv_[x][hi(hm(h, e_.f[x][xi]))], xi);
  }

  Elem conj(Elem z, Elem p) const { return mul(mul(z, p), inv(z)); }

  Elem star(Elem p, Elem q) const {
    const Elem h = hpart(p), x = kpart(p), k = hpart(q), y = kpart(q);
    const Elem xy = e_.K.bracket(x, y);
    const Elem inner = hm(hm(hi(h), hi(k)), gam(y, hi(h)));
    Elem v = hm(hm(h, k), gam(x, k));
    v = hm(v, e_.H.bracket(h, k));
    v = hm(v, sig(xy, inner));
    v = hm(v, e_.h[x][y]);
    return pack(v, xy);
  }

 private:
  const ExtensionData& e_;
  const GroupTable& H_;
  const GroupTable& K_;
  std::size_t nh_;
  Table sigma_inv_;
};

template <class F>
Found scan_h3k3(std::size_t nh, std::size_t nk, F&& f) {
  for (Elem h = 0; h < nh; ++h)
    for (Elem k = 0; k < nh; ++k)
      for (Elem l = 0; l < nh; ++l)
        for (Elem x = 0; x < nk; ++x)
          for (Elem y = 0; y < nk; ++y)
            for (Elem z = 0; z < nk; ++z)
              if (auto v = f(h, k, l, x, y, z)) return v;
  return std::nullopt;
}

Elem index_in(const std::vector<Elem>& to_sub, Elem a, const char* what) {
  if (to_sub[a] == static_cast<Elem>(-1))
    throw Error(ErrorKind::ConstructionInvalid, std::string(what) + " left the subgroup", {a});
  return to_sub[a];
}

std::vector<Elem> inverse_inclusion(const GroupHom& incl) {
  std::vector<Elem> to_sub(incl.target.order(), static_cast<Elem>(-1));
  for (Elem i = 0; i < incl.image.size(); ++i) to_sub[incl.image[i]] = i;
  return to_sub;
}

std::vector<Elem> checked_transversal(const GroupHom& proj,
                                      const std::optional<std::vector<Elem>>& transversal) {
  if (!transversal) return coset_representatives(proj);
  const auto& t = *transversal;
  if (t.size() != proj.target.order())
    throw Error(ErrorKind::InvalidParameters, "transversal has wrong length");
  for (Elem x = 0; x < t.size(); ++x)
    if (t[x] >= proj.source.order() || proj(t[x]) != x)
      throw Error(ErrorKind::InvalidParameters, "transversal entry in wrong coset", {x});
  return t;
}

}  // namespace

std::vector<Violation> verify_cocycle(const ExtensionData& e) {
  require_shapes(e);
  const GroupTable& H = e.H.group();
  const GroupTable& K = e.K.group();
  const std::size_t nh = H.order(), nk = K.order();
  const Elem one = H.identity(), k1 = K.identity();
  std::vector<Violation> out;

  push(out, [&]() -> Found {
    for (Elem x = 0; x < nk; ++x) {
      std::vector<unsigned char> seen(nh, 0);
      for (Elem a = 0; a < nh; ++a) {
        if (seen[e.sigma[x][a]]) return make("sigma-automorphism", {x, a}, e.sigma[x][a], e.sigma[x][a]);
        seen[e.sigma[x][a]] = 1;
      }
      for (Elem a = 0; a < nh; ++a)
        for (Elem b = 0; b < nh; ++b) {
          const Elem l = e.sigma[x][H.mul(a, b)], r = H.mul(e.sigma[x][a], e.sigma[x][b]);
          if (l != r) return make("sigma-automorphism", {x, a, b}, l, r);
        }
    }
    return std::nullopt;
  }());

  push(out, [&]() -> Found {
    for (Elem x = 0; x < nk; ++x)
      for (Elem a = 0; a < nh; ++a)
        for (Elem b = 0; b < nh; ++b) {
          const Elem l = e.gamma[x][H.mul(a, b)], r = H.mul(e.gamma[x][a], e.gamma[x][b]);
          if (l != r) return make("gamma-endomorphism", {x, a, b}, l, r);
        }
    return std::nullopt;
  }());

  push(out, [&]() -> Found {
    for (Elem a = 0; a < nh; ++a)
      if (e.sigma[k1][a] != a) return make("sigma-action", {k1, k1, a}, e.sigma[k1][a], a);
    for (Elem x = 0; x < nk; ++x)
      for (Elem y = 0; y < nk; ++y)
        for (Elem a = 0; a < nh; ++a) {
          const Elem l = e.sigma[K.mul(x, y)][a], r = e.sigma[x][e.sigma[y][a]];
          if (l != r) return make("sigma-action", {x, y, a}, l, r);
        }
    return std::nullopt;
  }());

  push(out, [&]() -> Found {
    for (Elem x = 0; x < nk; ++x) {
      if (e.f[k1][x] != one) return make("f-normalization", {k1, x}, e.f[k1][x], one);
      if (e.f[x][k1] != one) return make("f-normalization", {x, k1}, e.f[x][k1], one);
    }
    return std::nullopt;
  }());

  push(out, [&]() -> Found {
    for (Elem x = 0; x < nk; ++x)
      for (Elem y = 0; y < nk; ++y)
        for (Elem z = 0; z < nk; ++z) {
          const Elem l = H.mul(e.f[x][y], e.f[K.mul(x, y)][z]);
          const Elem r = H.mul(e.sigma[x][e.f[y][z]], e.f[x][K.mul(y, z)]);
          if (l != r) return make("cocycle", {x, y, z}, l, r);
        }
    return std::nullopt;
  }());

  auto lemma = [&](const char* label, auto lhs, auto rhs) -> Found {
    for (Elem x = 0; x < nk; ++x)
      for (Elem y = 0; y < nk; ++y) {
        const Elem l = lhs(x, y), r = rhs(x, y);
        if (l != r) return make(label, {x, y}, l, r);
      }
    return std::nullopt;
  };
  auto s_xy_f_inv = [&](Elem x, Elem y) { return e.sigma[K.mul(x, y)][e.f[K.inv(x)][x]]; };
  auto s_y_f = [&](Elem x, Elem y) { return e.sigma[y][e.f[x][K.inv(x)]]; };
  auto ff = [&](Elem x, Elem y) { return H.mul(e.f[y][x], e.f[K.mul(x, y)][K.inv(x)]); };
  push(out, lemma("lemma1", s_xy_f_inv, ff));
  push(out, lemma("lemma2", s_y_f, ff));
  push(out, lemma("lemma3", s_xy_f_inv, s_y_f));
  return out;
}

std::vector<Violation> verify_star_compatibility(const ExtensionData& e) {
  if (auto pre = verify_cocycle(e); !pre.empty())
    throw Error(ErrorKind::PreconditionFailed, "cocycle check failed: " + pre[0].label,
                pre[0].witness);
  const GroupTable& H = e.H.group();
  const GroupTable& K = e.K.group();
  const std::size_t nh = H.order(), nk = K.order();
  const Elem one = H.identity(), k1 = K.identity();
  const PairOps p(e);
  std::vector<Violation> out;

  push(out, [&]() -> Found {
    for (Elem x = 0; x < nk; ++x) {
      if (e.h[x][k1] != one) return make("h-normalization", {x, k1}, e.h[x][k1], one);
      if (e.h[k1][x] != one) return make("h-normalization", {k1, x}, e.h[k1][x], one);
      if (e.h[x][x] != one) return make("h-normalization", {x, x}, e.h[x][x], one);
    }
    return std::nullopt;
  }());

  push(out, [&]() -> Found {
    for (Elem h = 0; h < nh; ++h)
      for (Elem k = 0; k < nh; ++k)
        for (Elem x = 0; x < nk; ++x)
          for (Elem y = 0; y < nk; ++y) {
            const Elem b = e.H.bracket(h, k);
            const Elem l = e.sigma[e.K.bracket(x, y)][b];
            if (l != b) return make("sigma-fixes-bracket", {h, k, x, y}, l, b);
          }
    return std::nullopt;
  }());

  const Elem pe = p.pack(one, k1);
  push(out, scan_h3k3(nh, nk, [&](Elem h, Elem k, Elem l, Elem x, Elem y, Elem z) -> Found {
    const Elem P = p.pack(h, x), Q = p.pack(k, y), R = p.pack(l, z);
    const Elem lhs = p.star(p.mul(P, Q), R);
    const Elem rhs = p.mul(p.conj(P, p.star(Q, R)), p.star(P, R));
    if (lhs != rhs) return make("left-distributive", {h, k, l, x, y, z}, lhs, rhs);
    return std::nullopt;
  }));
  push(out, scan_h3k3(nh, nk, [&](Elem h, Elem k, Elem l, Elem x, Elem y, Elem z) -> Found {
    const Elem P = p.pack(h, x), Q = p.pack(k, y), R = p.pack(l, z);
    const Elem lhs = p.star(P, p.mul(Q, R));
    const Elem rhs = p.mul(p.star(P, Q), p.conj(Q, p.star(P, R)));
    if (lhs != rhs) return make("right-distributive", {h, k, l, x, y, z}, lhs, rhs);
    return std::nullopt;
  }));
  push(out, scan_h3k3(nh, nk, [&](Elem h, Elem k, Elem l, Elem x, Elem y, Elem z) -> Found {
    const Elem P = p.pack(h, x), Q = p.pack(k, y), R = p.pack(l, z);
    const Elem lhs = p.conj(R, p.star(P, Q));
    const Elem rhs = p.star(p.conj(R, P), p.conj(R, Q));
    if (lhs != rhs) return make("conjugation", {h, k, l, x, y, z}, lhs, rhs);
    return std::nullopt;
  }));
  push(out, scan_h3k3(nh, nk, [&](Elem h, Elem k, Elem l, Elem x, Elem y, Elem z) -> Found {
    const Elem P = p.pack(h, x), Q = p.pack(k, y), R = p.pack(l, z);
    const Elem a = p.star(p.star(P, Q), p.conj(Q, R));
    const Elem b = p.star(p.star(Q, R), p.conj(R, P));
    const Elem c = p.star(p.star(R, P), p.conj(P, Q));
    const Elem lhs = p.mul(p.mul(a, b), c);
    if (lhs != pe) return make("jacobi", {h, k, l, x, y, z}, lhs, pe);
    return std::nullopt;
  }));
  return out;
}

GroupTable build_group_from_extension(const ExtensionData& e) {
  if (auto pre = verify_cocycle(e); !pre.empty())
    throw Error(ErrorKind::PreconditionFailed, "cocycle check failed: " + pre[0].label,
                pre[0].witness);
  const std::size_t n = e.H.group().order() * e.K.group().order();
  const PairOps p(e);
  Table raw(n, std::vector<Elem>(n));
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) raw[a][b] = p.mul(a, b);
  const std::string name = "ext(" + e.H.group().name() + "," + e.K.group().name() + ")";
  try {
    return validate_group(raw, name);
  } catch (const Error& err) {
    throw Error(ErrorKind::ConstructionInvalid, err.what(), err.witness());
  }
}

Mla build_star_from_extension(const ExtensionData& e) {
  GroupTable g = build_group_from_extension(e);
  if (auto pre = verify_star_compatibility(e); !pre.empty())
    throw Error(ErrorKind::PreconditionFailed, "compatibility check failed: " + pre[0].label,
                pre[0].witness);
  const std::size_t n = g.order();
  const PairOps p(e);
  std::vector<Elem> flat(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) flat[a * n + b] = p.star(a, b);
  Mla out = Mla::assess(std::move(g), StarTable(n, std::move(flat)));
  if (!out.certified())
    throw Error(ErrorKind::TheoremViolated, out.violations()[0].label, out.violations()[0].witness);
  return out;
}

std::vector<Violation> verify_pairing(const CentralPairing& p) {
  const GroupTable& Q = p.Q;
  const GroupTable& A = p.A;
  const std::size_t nq = Q.order();
  require_table(p.pairing, nq, nq, A.order(), "pairing");
  std::vector<Violation> out;
  push(out, [&]() -> Found {
    for (Elem x = 0; x < nq; ++x)
      if (p.pairing[x][x] != A.identity())
        return make("alternating", {x}, p.pairing[x][x], A.identity());
    return std::nullopt;
  }());
  push(out, [&]() -> Found {
    for (Elem x = 0; x < nq; ++x)
      for (Elem y = 0; y < nq; ++y)
        for (Elem z = 0; z < nq; ++z) {
          const Elem l = p.pairing[Q.mul(x, y)][z];
          const Elem r = A.mul(p.pairing[x][z], p.pairing[y][z]);
          if (l != r) return make("left-additive", {x, y, z}, l, r);
        }
    return std::nullopt;
  }());
  push(out, [&]() -> Found {
    for (Elem x = 0; x < nq; ++x)
      for (Elem y = 0; y < nq; ++y)
        for (Elem z = 0; z < nq; ++z) {
          const Elem l = p.pairing[x][Q.mul(y, z)];
          const Elem r = A.mul(p.pairing[x][y], p.pairing[x][z]);
          if (l != r) return make("right-additive", {x, y, z}, l, r);
        }
    return std::nullopt;
  }());
  return out;
}

std::vector<CentralPairing> enumerate_central_pairings(const GroupTable& q, const GroupTable& a) {
  std::vector<CentralPairing> out;
  for (auto& t : alternating_biadditive_maps(q, a)) {
    CentralPairing p{q, a, std::move(t)};
    if (!verify_pairing(p).empty())
      throw Error(ErrorKind::ConstructionInvalid, "enumerated pairing failed verification");
    out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end(),
            [](const CentralPairing& x, const CentralPairing& y) { return x.pairing < y.pairing; });
  return out;
}

std::pair<GroupTable, GroupHom> abelianization(const GroupTable& g) {
  return quotient(g, derived_subgroup(g));
}

std::pair<GroupTable, GroupHom> commutator_subgroup(const GroupTable& g) {
  return induced_subgroup(g, derived_subgroup(g));
}

namespace {

struct CentralSetup {
  GroupHom proj;
  GroupHom incl;
  std::vector<Elem> to_a;
};

CentralSetup central_setup(const GroupTable& g, const CentralPairing& p) {
  if (!is_class2(g)) throw Error(ErrorKind::PreconditionFailed, "group is not of class <= 2");
  auto [q, proj] = abelianization(g);
  auto [a, incl] = commutator_subgroup(g);
  if (!(q == p.Q)) throw Error(ErrorKind::QuotientMismatch, "Q differs from G/[G,G]");
  if (!(a == p.A)) throw Error(ErrorKind::QuotientMismatch, "A differs from [G,G]");
  if (auto v = verify_pairing(p); !v.empty())
    throw Error(ErrorKind::PreconditionFailed, v[0].label, v[0].witness);
  auto to_a = inverse_inclusion(incl);
  return {std::move(proj), std::move(incl), std::move(to_a)};
}

}  // namespace

Mla central_pairing_to_star(const GroupTable& g, const CentralPairing& p) {
  const CentralSetup s = central_setup(g, p);
  const std::size_t n = g.order();
  std::vector<Elem> flat(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) flat[a * n + b] = s.incl(p.pairing[s.proj(a)][s.proj(b)]);
  Mla out = Mla::assess(g, StarTable(n, std::move(flat)));
  if (!out.certified())
    throw Error(ErrorKind::TheoremViolated, out.violations()[0].label, out.violations()[0].witness);
  return out;
}

CentralPairing star_to_central_pairing(const GroupTable& g, const StarTable& star,
                                       const std::optional<std::vector<Elem>>& transversal) {
  if (star.order() != g.order()) throw Error(ErrorKind::Format, "star order does not match group");
  if (!is_class2(g)) throw Error(ErrorKind::PreconditionFailed, "group is not of class <= 2");
  if (auto v = check_mla_axioms(g, star); !v.empty())
    throw Error(ErrorKind::PreconditionFailed, v[0].label, v[0].witness);
  const Subset derived = derived_subgroup(g);
  const Mla induced = induced_quotient_star(g, star, derived);
  if (!is_trivial_star(induced.group(), induced.star()))
    throw Error(ErrorKind::NotCentralType, "quotient structure nontrivial");
  if (!derived.is_subset_of(lz_center(g, star)))
    throw Error(ErrorKind::NotCentralType, "commutator subgroup not in LZ");

  auto [q, proj] = abelianization(g);
  auto [a, incl] = commutator_subgroup(g);
  const auto t = checked_transversal(proj, transversal);
  const auto to_a = inverse_inclusion(incl);
  const std::size_t nq = q.order();
  Table pairing(nq, std::vector<Elem>(nq));
  for (Elem x = 0; x < nq; ++x)
    for (Elem y = 0; y < nq; ++y) pairing[x][y] = index_in(to_a, star(t[x], t[y]), "star value");
  for (Elem u = 0; u < g.order(); ++u)
    for (Elem v = 0; v < g.order(); ++v)
      if (star(u, v) != incl(pairing[proj(u)][proj(v)]))
        throw Error(ErrorKind::NotCentralType, "section-dependent value", {u, v});
  return CentralPairing{std::move(q), std::move(a), std::move(pairing)};
}

CentralExtension central_extension_data(const GroupTable& g, const CentralPairing& p,
                                        const std::optional<std::vector<Elem>>& transversal) {
  const CentralSetup s = central_setup(g, p);
  const auto t = checked_transversal(s.proj, transversal);
  const GroupTable& Q = p.Q;
  const GroupTable& A = p.A;
  const std::size_t nq = Q.order(), na = A.order();

  Table sigma(nq), gamma(nq, std::vector<Elem>(na, A.identity())), f(nq, std::vector<Elem>(nq));
  for (Elem x = 0; x < nq; ++x) {
    sigma[x].resize(na);
    for (Elem k = 0; k < na; ++k) sigma[x][k] = k;
  }
  for (Elem x = 0; x < nq; ++x)
    for (Elem y = 0; y < nq; ++y) {
      const Elem v = g.mul(g.mul(t[x], t[y]), g.inv(t[Q.mul(x, y)]));
      f[x][y] = index_in(s.to_a, v, "factor set");
    }
  CentralExtension out{
      ExtensionData{LieRing::trivial(A), LieRing::trivial(Q), std::move(sigma), std::move(gamma),
                    std::move(f), p.pairing},
      std::vector<Elem>(na * nq)};
  for (Elem x = 0; x < nq; ++x)
    for (Elem k = 0; k < na; ++k) out.to_group[k + na * x] = g.mul(s.incl(k), t[x]);
  return out;
}

Mla metacyclic_star(const GroupTable& g, const Subset& hsub, const Table& gammas, const Table& hmap) {
  if (hsub.parent_order() != g.order())
    throw Error(ErrorKind::Format, "subset does not belong to the group");
  if (!is_normal(g, hsub)) throw Error(ErrorKind::PreconditionFailed, "H is not a normal subgroup");
  auto [H, incl] = induced_subgroup(g, hsub);
  auto [Q, proj] = quotient(g, hsub);
  auto is_cyclic = [](const GroupTable& c) {
    for (Elem a = 0; a < c.order(); ++a)
      if (c.element_order(a) == c.order()) return true;
    return false;
  };
  if (!is_cyclic(H)) throw Error(ErrorKind::PreconditionFailed, "H is not cyclic");
  if (!is_cyclic(Q)) throw Error(ErrorKind::PreconditionFailed, "G/H is not cyclic");

  const std::size_t nh = H.order(), nq = Q.order();
  require_table(gammas, nq, nh, nh, "gammas");
  require_table(hmap, nq, nq, nh, "hmap");
  const auto t = coset_representatives(proj);
  const auto to_h = inverse_inclusion(incl);

  for (Elem x = 0; x < nq; ++x)
    for (Elem a = 0; a < nh; ++a)
      for (Elem b = 0; b < nh; ++b)
        if (gammas[x][H.mul(a, b)] != H.mul(gammas[x][a], gammas[x][b]))
          throw Error(ErrorKind::PreconditionFailed, "gamma-endomorphism", {x, a, b});

  Table sigma(nq, std::vector<Elem>(nh)), f(nq, std::vector<Elem>(nq));
  for (Elem x = 0; x < nq; ++x)
    for (Elem k = 0; k < nh; ++k) sigma[x][k] = to_h[g.conj(t[x], incl(k))];
  for (Elem x = 0; x < nq; ++x)
    for (Elem y = 0; y < nq; ++y)
      f[x][y] = to_h[g.mul(g.mul(t[x], t[y]), g.inv(t[Q.mul(x, y)]))];

  auto m = [&](Elem a, Elem b) { return H.mul(a, b); };
  auto iv = [&](Elem a) { return H.inv(a); };
  auto G = [&](Elem x, Elem k) { return gammas[x][k]; };
  auto S = [&](Elem x, Elem k) { return sigma[x][k]; };
  auto fail = [](const char* label, std::vector<Elem> w) {
    throw Error(ErrorKind::ConditionFailed, label, std::move(w));
  };

  for (Elem x = 0; x < nq; ++x)
    for (Elem y = 0; y < nq; ++y)
      for (Elem z = 0; z < nq; ++z)
        if (m(f[x][y], f[Q.mul(x, y)][z]) != m(S(x, f[y][z]), f[x][Q.mul(y, z)]))
          fail("cocycle", {x, y, z});
  const Elem q1 = Q.identity(), one = H.identity();
  for (Elem x = 0; x < nq; ++x)
    if (hmap[x][q1] != one || hmap[q1][x] != one || hmap[x][x] != one) fail("h-normalization", {x});

  // (a) and (b): free variables (k | l, x, y, z)
  for (Elem k = 0; k < nh; ++k)
    for (Elem x = 0; x < nq; ++x)
      for (Elem y = 0; y < nq; ++y)
        for (Elem z = 0; z < nq; ++z) {
          const Elem xy = Q.mul(x, y), yz = Q.mul(y, z);
          const Elem la = m(G(z, m(S(x, iv(k)), iv(f[x][y]))), hmap[xy][z]);
          const Elem ra = m(S(x, m(G(z, iv(k)), hmap[y][z])), hmap[x][z]);
          if (la != ra) fail("a", {k, x, y, z});
          const Elem l = k;
          const Elem lb = m(G(x, m(S(y, l), f[y][z])), hmap[x][yz]);
          const Elem rb = m(S(y, m(G(x, l), hmap[x][z])), hmap[x][y]);
          if (lb != rb) fail("b", {l, x, y, z});
        }

  // (c) and (d): free variables (h, k, l, x, y, z)
  for (Elem h = 0; h < nh; ++h)
    for (Elem k = 0; k < nh; ++k)
      for (Elem l = 0; l < nh; ++l)
        for (Elem x = 0; x < nq; ++x)
          for (Elem y = 0; y < nq; ++y)
            for (Elem z = 0; z < nq; ++z) {
              const Elem lc = S(z, m(m(G(x, k), G(y, iv(h))), hmap[x][y]));
              const Elem c1 = G(x, m(m(m(m(l, S(z, k)), f[z][y]), iv(f[y][z])), S(y, iv(l))));
              const Elem c2 = G(y, m(m(m(m(iv(l), S(z, iv(h))), S(x, l)), iv(f[z][x])), f[x][z]));
              const Elem rc = m(m(c1, c2), hmap[x][y]);
              if (lc != rc) fail("c", {h, k, l, x, y, z});
              const Elem d1 = G(z, m(m(G(x, iv(k)), G(y, h)), iv(hmap[x][y])));
              const Elem d2 = G(x, m(m(G(y, iv(l)), G(z, k)), iv(hmap[y][z])));
              const Elem d3 = G(y, m(m(G(z, iv(h)), G(x, l)), iv(hmap[z][x])));
              if (m(m(d1, d2), d3) != one) fail("d", {h, k, l, x, y, z});
            }

  const std::size_t n = g.order();
  std::vector<Elem> hpart(n), qpart(n);
  for (Elem a = 0; a < n; ++a) {
    qpart[a] = proj(a);
    hpart[a] = to_h[g.mul(a, g.inv(t[qpart[a]]))];
  }
  std::vector<Elem> flat(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const Elem x = qpart[a], y = qpart[b];
      const Elem v = m(m(G(x, hpart[b]), G(y, iv(hpart[a]))), hmap[x][y]);
      flat[a * n + b] = incl(v);
    }
  Mla out = Mla::assess(g, StarTable(n, std::move(flat)));
  if (!out.certified())
    throw Error(ErrorKind::TheoremViolated, out.violations()[0].label, out.violations()[0].witness);
  return out;
}

namespace {

template <class T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& v) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

// Extends per-basis values additively: out[x] = prod_i base[i]^{c_i(x)}
// where `apply(acc, base, c)` folds one basis contribution.
template <class V, class Apply>
std::vector<V> extend_on_basis(const AbelianBasis& basis, std::size_t order, const V& zero,
                               const std::vector<V>& base, Apply apply) {
  std::vector<V> out(order, zero);
  for (Elem x = 0; x < order; ++x) {
    const auto& c = basis.coords(x);
    V acc = zero;
    for (std::size_t i = 0; i < base.size(); ++i) acc = apply(acc, base[i], c[i]);
    out[x] = acc;
  }
  return out;
}

std::vector<Elem> compose(const std::vector<Elem>& a, const std::vector<Elem>& b) {
  std::vector<Elem> out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[b[i]];
  return out;
}

}  // namespace

std::optional<ExtensionData> random_extension_data(std::mt19937_64& rng, std::size_t max_attempts,
                                                   RandomExtensionStats* stats) {
  static const std::vector<std::vector<std::size_t>> h_choices = {{2}, {3}, {4}, {2, 2}, {5}};
  static const std::vector<std::vector<std::size_t>> k_choices = {{2},    {3},    {4},   {2, 2},
                                                                  {3, 3}, {2, 4}, {6}};
  std::uniform_int_distribution<int> coin(0, 1), third(0, 2);

  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    if (stats) ++stats->attempts;
    const GroupTable H = abelian(pick(rng, h_choices));
    const GroupTable K = abelian(pick(rng, k_choices));
    const std::size_t nh = H.order(), nk = K.order();
    const AbelianBasis kb(K);

    const auto hb = abelian_bracket_oracle(H);
    const auto kbr = abelian_bracket_oracle(K);
    LieRing lh(Mla::certify(H, pick(rng, hb)));
    LieRing lk(Mla::certify(K, pick(rng, kbr)));

    std::vector<Elem> identity_map(nh);
    for (Elem k = 0; k < nh; ++k) identity_map[k] = k;

    // sigma: commuting automorphisms on the basis of K with the right orders.
    Table sigma(nk, identity_map);
    if (coin(rng)) {
      const auto auts = automorphism_group(H);
      std::vector<std::vector<Elem>> base;
      for (std::size_t i = 0; i < kb.rank(); ++i) {
        std::vector<std::vector<Elem>> ok;
        for (const auto& a : auts) {
          std::vector<Elem> pw = identity_map;
          for (std::size_t j = 0; j < kb.orders()[i]; ++j) pw = compose(a, pw);
          bool commutes = pw == identity_map;
          for (const auto& b : base)
            commutes = commutes && compose(a, b) == compose(b, a);
          if (commutes) ok.push_back(a);
        }
        base.push_back(pick(rng, ok));
      }
      sigma = extend_on_basis(kb, nk, identity_map, base,
                              [](std::vector<Elem> acc, const std::vector<Elem>& b, std::size_t c) {
                                for (std::size_t j = 0; j < c; ++j) acc = compose(b, acc);
                                return acc;
                              });
    }

    Table f(nk, std::vector<Elem>(nk, H.identity()));
    if (coin(rng)) f = pick(rng, biadditive_maps(K, H));

    const AbelianBasis hbasis(H);
    Table gamma(nk, std::vector<Elem>(nh, H.identity()));
    switch (third(rng)) {
      case 0:
        break;
      case 1: {
        const long long c = std::uniform_int_distribution<long long>(1, 4)(rng);
        for (Elem x = 0; x < nk; ++x)
          for (Elem k = 0; k < nh; ++k) gamma[x][k] = hbasis.scale(H.mul(sigma[x][k], H.inv(k)), c);
        break;
      }
      default: {
        const auto ends = homomorphisms(H, H);
        std::vector<std::vector<Elem>> base;
        for (std::size_t i = 0; i < kb.rank(); ++i) {
          std::vector<std::vector<Elem>> ok;
          for (const auto& en : ends) {
            bool killed = true;
            for (Elem k = 0; k < nh && killed; ++k)
              killed = hbasis.scale(en[k], static_cast<long long>(kb.orders()[i])) == H.identity();
            if (killed) ok.push_back(en);
          }
          base.push_back(pick(rng, ok));
        }
        const std::vector<Elem> zero(nh, H.identity());
        gamma = extend_on_basis(kb, nk, zero, base,
                                [&](std::vector<Elem> acc, const std::vector<Elem>& b, std::size_t c) {
                                  for (Elem k = 0; k < nh; ++k)
                                    acc[k] = H.mul(acc[k], hbasis.scale(b[k], static_cast<long long>(c)));
                                  return acc;
                                });
      }
    }

    Table h(nk, std::vector<Elem>(nk, H.identity()));
    switch (third(rng)) {
      case 0:
        break;
      case 1:
        h = pick(rng, alternating_biadditive_maps(K, H));
        break;
      default: {
        const long long c = std::uniform_int_distribution<long long>(1, 4)(rng);
        for (Elem x = 0; x < nk; ++x)
          for (Elem y = 0; y < nk; ++y) h[x][y] = hbasis.scale(H.mul(f[x][y], H.inv(f[y][x])), c);
      }
    }

    ExtensionData e{std::move(lh), std::move(lk), std::move(sigma), std::move(gamma), std::move(f),
                    std::move(h)};
    if (verify_cocycle(e).empty() && verify_star_compatibility(e).empty()) return e;
    if (stats) ++stats->rejected;
  }
  return std::nullopt;
}

}  // namespace mla
