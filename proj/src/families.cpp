#include "mla/families.hpp"

#include <charconv>
#include <numeric>

namespace mla {

namespace {

using Raw = std::vector<std::vector<Elem>>;

Raw blank(std::size_t n) { return Raw(n, std::vector<Elem>(n)); }

std::size_t powmod(std::size_t base, std::size_t exp, std::size_t mod) {
  std::size_t r = 1 % mod;
  base %= mod;
  while (exp) {
    if (exp & 1) r = r * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return r;
}

std::vector<std::size_t> parse_params(std::string_view text) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find_first_of(",:", pos);
    if (end == std::string_view::npos) end = text.size();
    const auto field = text.substr(pos, end - pos);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size())
      throw Error(ErrorKind::InvalidParameters, "bad parameter '" + std::string(field) + "'");
    out.push_back(value);
    pos = end + 1;
  }
  return out;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

GroupTable build_single(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string name = trim(spec.substr(0, colon));
  std::vector<std::size_t> p;
  if (colon != std::string_view::npos) p = parse_params(spec.substr(colon + 1));
  auto need = [&](std::size_t k) {
    if (p.size() != k)
      throw Error(ErrorKind::InvalidParameters,
                  name + " expects " + std::to_string(k) + " parameter(s)");
  };
  if (name == "cyclic") {
    need(1);
    return cyclic(p[0]);
  }
  if (name == "abelian") {
    if (p.empty()) throw Error(ErrorKind::InvalidParameters, "abelian expects factors");
    return abelian(p);
  }
  if (name == "dihedral") {
    need(1);
    return dihedral(p[0]);
  }
  if (name == "quaternion8") {
    need(0);
    return quaternion8();
  }
  if (name == "heisenberg") {
    need(1);
    return heisenberg(p[0]);
  }
  if (name == "metacyclic") {
    need(4);
    return metacyclic(p[0], p[1], p[2], p[3]);
  }
  throw Error(ErrorKind::InvalidParameters, "unknown family '" + name + "'");
}

}  // namespace

GroupTable cyclic(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidParameters, "cyclic order must be positive");
  Raw raw = blank(n);
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j) raw[i][j] = static_cast<Elem>((i + j) % n);
  return validate_group(raw, "cyclic:" + std::to_string(n));
}

GroupTable abelian(const std::vector<std::size_t>& factors) {
  std::size_t n = 1;
  for (auto f : factors) {
    if (f == 0) throw Error(ErrorKind::InvalidParameters, "factor orders must be positive");
    n *= f;
  }
  Raw raw = blank(n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      std::size_t a = x, b = y, radix = 1, out = 0;
      for (auto f : factors) {
        out += ((a % f + b % f) % f) * radix;
        a /= f;
        b /= f;
        radix *= f;
      }
      raw[x][y] = static_cast<Elem>(out);
    }
  std::string name = "abelian:";
  for (std::size_t i = 0; i < factors.size(); ++i)
    name += (i ? "," : "") + std::to_string(factors[i]);
  return validate_group(raw, name);
}

GroupTable dihedral(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidParameters, "dihedral parameter must be positive");
  Raw raw = blank(2 * n);
  for (Elem x = 0; x < 2 * n; ++x)
    for (Elem y = 0; y < 2 * n; ++y) {
      const std::size_t i = x % n, j = x / n, k = y % n, l = y / n;
      // r^i s^j r^k s^l = r^(i + (-1)^j k) s^(j+l)
      const std::size_t rot = j ? (i + n - k) % n : (i + k) % n;
      raw[x][y] = static_cast<Elem>(rot + n * ((j + l) % 2));
    }
  return validate_group(raw, "dihedral:" + std::to_string(n));
}

GroupTable quaternion8() {
  GroupTable q = metacyclic(4, 2, 3, 2);
  q.rename("quaternion8");
  return q;
}

GroupTable heisenberg(std::size_t p) {
  if (p < 2) throw Error(ErrorKind::InvalidParameters, "heisenberg needs p >= 2");
  const std::size_t n = p * p * p;
  Raw raw = blank(n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const std::size_t a = x % p, b = (x / p) % p, c = x / (p * p);
      const std::size_t a2 = y % p, b2 = (y / p) % p, c2 = y / (p * p);
      const std::size_t ra = (a + a2) % p, rb = (b + b2) % p, rc = (c + c2 + a * b2) % p;
      raw[x][y] = static_cast<Elem>(ra + p * rb + p * p * rc);
    }
  return validate_group(raw, "heisenberg:" + std::to_string(p));
}

GroupTable metacyclic(std::size_t m, std::size_t n, std::size_t r, std::size_t s) {
  if (m == 0 || n == 0) throw Error(ErrorKind::InvalidParameters, "metacyclic orders must be positive");
  if (powmod(r, n, m) != 1 % m)
    throw Error(ErrorKind::InvalidParameters, "r^n != 1 (mod m)");
  if ((s % m) * ((r % m + m - 1) % m) % m != 0)
    throw Error(ErrorKind::InvalidParameters, "s(r-1) != 0 (mod m)");
  const std::size_t order = m * n;
  Raw raw = blank(order);
  for (Elem x = 0; x < order; ++x)
    for (Elem y = 0; y < order; ++y) {
      const std::size_t i = x % m, j = x / m, k = y % m, l = y / m;
      // a^i b^j a^k b^l = a^(i + k r^j) b^(j+l), and b^n = a^s on wrap.
      std::size_t exp_a = (i + k * powmod(r, j, m)) % m;
      std::size_t exp_b = j + l;
      if (exp_b >= n) {
        exp_b -= n;
        exp_a = (exp_a + s) % m;
      }
      raw[x][y] = static_cast<Elem>(exp_a + m * exp_b);
    }
  return validate_group(raw, "metacyclic:" + std::to_string(m) + "," + std::to_string(n) +
                                 "," + std::to_string(r) + "," + std::to_string(s));
}

GroupTable construct_standard_group(std::string_view spec) {
  const auto star = spec.find('*');
  if (star == std::string_view::npos) return build_single(spec);
  GroupTable left = build_single(spec.substr(0, star));
  GroupTable right = construct_standard_group(spec.substr(star + 1));
  GroupTable prod = direct_product(left, right);
  prod.rename(left.name() + "*" + right.name());
  return prod;
}

}  // namespace mla
