#pragma once

#include <string>
#include <utility>

#include <nlohmann/json.hpp>

#include "mla/extension.hpp"
#include "mla/search.hpp"
#include "mla/structure.hpp"

namespace mla {

using Json = nlohmann::ordered_json;

// File formats:
//   group      {"name": str, "order": n, "mul": [[int]]}
//   star       {"group": family-spec | group, "star": [[int]]}
//   extension  {"H": group, "K": group, "bracket_H": [[int]], "bracket_K": [[int]],
//               "sigma": [[int]], "gamma": [[int]], "f": [[int]], "h": [[int]]}
//   pairing    {"group": family-spec | group, "pairing": [[int]]}
// A group may be given as a family spec string wherever an object is accepted.
// Malformed input throws Error(Format).

Json group_to_json(const GroupTable& g);
GroupTable group_from_json(const Json& j);

// The family spec when it rebuilds `g` exactly, otherwise the full table.
Json group_reference(const GroupTable& g);

Json table_to_json(const Table& t);
Table table_from_json(const Json& j, const char* what);

Json star_to_json(const GroupTable& g, const StarTable& star);
std::pair<GroupTable, StarTable> star_from_json(const Json& j);
// A star over a group already in hand; the file's own group must match.
StarTable star_from_json(const Json& j, const GroupTable& g);

Json extension_to_json(const ExtensionData& e);
ExtensionData extension_from_json(const Json& j);

Json pairing_to_json(const GroupTable& g, const CentralPairing& p);

Json violations_to_json(const std::vector<Violation>& v);
Json subset_to_json(const Subset& s);
Json series_to_json(const SeriesReport& r);
Json class2_to_json(const Class2Report& r);

// 64-bit FNV-1a, rendered as 16 hex digits.
std::string fnv1a64(const std::string& data);

// IO errors throw std::runtime_error naming the path.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);
Json read_json_file(const std::string& path);

}  // namespace mla
