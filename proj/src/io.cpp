#include "mla/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "mla/families.hpp"

namespace mla {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::Format, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

LieRing lie_ring_from(const GroupTable& g, const Table& bracket, const char* what) {
  if (bracket.size() != g.order()) bad(std::string(what) + " has wrong shape");
  Mla m = Mla::assess(g, StarTable::from_rows(bracket));
  if (!m.certified())
    throw Error(ErrorKind::PreconditionFailed, std::string(what) + " fails " + m.violations()[0].label,
                m.violations()[0].witness);
  return LieRing(std::move(m));
}

}  // namespace

Json group_to_json(const GroupTable& g) {
  Json j;
  j["name"] = g.name();
  j["order"] = g.order();
  j["mul"] = g.rows();
  return j;
}

GroupTable group_from_json(const Json& j) {
  if (j.is_string()) return construct_standard_group(j.get<std::string>());
  const Table mul = table_from_json(field(j, "mul"), "mul");
  std::string name;
  if (j.contains("name")) {
    if (!j.at("name").is_string()) bad("group name must be a string");
    name = j.at("name").get<std::string>();
  }
  if (j.contains("order") && (!j.at("order").is_number_unsigned() || j.at("order").get<std::size_t>() != mul.size()))
    bad("group order does not match table");
  return validate_group(mul, name);
}

Json group_reference(const GroupTable& g) {
  try {
    if (!g.name().empty() && construct_standard_group(g.name()) == g) return g.name();
  } catch (const Error&) {
  }
  return group_to_json(g);
}

Json table_to_json(const Table& t) { return Json(t); }

Table table_from_json(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array of rows");
  Table t;
  t.reserve(j.size());
  for (const auto& row : j) {
    if (!row.is_array()) bad(std::string(what) + " must be an array of rows");
    std::vector<Elem> r;
    r.reserve(row.size());
    for (const auto& v : row) {
      if (!v.is_number_unsigned()) bad(std::string(what) + " entries must be non-negative integers");
      const auto x = v.get<std::uint64_t>();
      if (x > 0xffffffffULL) bad(std::string(what) + " entry too large");
      r.push_back(static_cast<Elem>(x));
    }
    t.push_back(std::move(r));
  }
  return t;
}

Json star_to_json(const GroupTable& g, const StarTable& star) {
  Json j;
  j["group"] = group_reference(g);
  j["star"] = star.rows();
  return j;
}

std::pair<GroupTable, StarTable> star_from_json(const Json& j) {
  GroupTable g = group_from_json(field(j, "group"));
  StarTable s = star_from_json(j, g);
  return {std::move(g), std::move(s)};
}

StarTable star_from_json(const Json& j, const GroupTable& g) {
  if (j.contains("group") && !(group_from_json(j.at("group")) == g))
    bad("star file belongs to a different group");
  const Table rows = table_from_json(field(j, "star"), "star");
  if (rows.size() != g.order()) bad("star has wrong shape");
  for (const auto& r : rows)
    if (r.size() != g.order()) bad("star has wrong shape");
  return StarTable::from_rows(rows);
}

Json extension_to_json(const ExtensionData& e) {
  Json j;
  j["H"] = group_reference(e.H.group());
  j["K"] = group_reference(e.K.group());
  j["bracket_H"] = e.H.mla().star().rows();
  j["bracket_K"] = e.K.mla().star().rows();
  j["sigma"] = e.sigma;
  j["gamma"] = e.gamma;
  j["f"] = e.f;
  j["h"] = e.h;
  return j;
}

ExtensionData extension_from_json(const Json& j) {
  GroupTable H = group_from_json(field(j, "H"));
  GroupTable K = group_from_json(field(j, "K"));
  if (!H.is_abelian() || !K.is_abelian())
    throw Error(ErrorKind::PreconditionFailed, "H and K must be abelian");
  Table bh = table_from_json(field(j, "bracket_H"), "bracket_H");
  Table bk = table_from_json(field(j, "bracket_K"), "bracket_K");
  LieRing lh = lie_ring_from(H, bh, "bracket_H");
  LieRing lk = lie_ring_from(K, bk, "bracket_K");
  return ExtensionData{std::move(lh),
                       std::move(lk),
                       table_from_json(field(j, "sigma"), "sigma"),
                       table_from_json(field(j, "gamma"), "gamma"),
                       table_from_json(field(j, "f"), "f"),
                       table_from_json(field(j, "h"), "h")};
}

Json pairing_to_json(const GroupTable& g, const CentralPairing& p) {
  Json j;
  j["group"] = group_reference(g);
  j["pairing"] = p.pairing;
  return j;
}

Json violations_to_json(const std::vector<Violation>& v) {
  Json out = Json::array();
  for (const auto& x : v) {
    Json j;
    j["label"] = x.label;
    j["witness"] = x.witness;
    j["left"] = x.left;
    j["right"] = x.right;
    out.push_back(std::move(j));
  }
  return out;
}

Json subset_to_json(const Subset& s) { return Json(s.elements()); }

Json series_to_json(const SeriesReport& r) {
  Json j;
  j["kind"] = to_string(r.kind);
  Json terms = Json::array();
  for (const auto& t : r.terms) terms.push_back(subset_to_json(t));
  j["terms"] = std::move(terms);
  j["reaches_identity"] = r.reaches_identity;
  j["length"] = r.length ? Json(*r.length) : Json(nullptr);
  return j;
}

Json class2_to_json(const Class2Report& r) {
  auto item = [](const PropertyCheck& c) {
    Json j;
    j["holds"] = c.holds;
    j["witness"] = c.witness;
    return j;
  };
  Json j;
  j["commutator_star_trivial"] = item(r.commutator_star_trivial);
  j["star_span_abelian"] = item(r.star_span_abelian);
  j["lie_span_abelian"] = item(r.lie_span_abelian);
  j["mz_star_central"] = item(r.mz_star_central);
  j["star_kills_commutators"] = item(r.star_kills_commutators);
  j["all"] = r.all();
  return j;
}

std::string fnv1a64(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << contents;
  if (!out) throw std::runtime_error("cannot write " + path);
}

Json read_json_file(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::Format, path + ": " + e.what());
  }
}

}  // namespace mla
