#pragma once

#include <string>

#include "baxter/census.hpp"
#include "baxter/floorplan.hpp"
#include "baxter/nilp.hpp"
#include "baxter/permutation.hpp"
#include "baxter/tlt.hpp"

#include <json.hpp>

namespace baxter {

using Json = nlohmann::json;

// Payload encodings. Lists are canonicalized (points sorted, tiles by (y,x))
// so dumping a re-parsed object is byte-identical.
Json to_json(const TreeLikeTableau& t);
Json to_json(const PackedFloorplan& f);
Json to_json(const Floorplan& f);
Json to_json(const Permutation& p);
Json to_json(const NilpTriple& t);
Json to_json(const DyckPair& d);
Json to_json(const CheckResult& c);

TreeLikeTableau tlt_from_json(const Json& j);
PackedFloorplan pfp_from_json(const Json& j);
Floorplan floorplan_from_json(const Json& j);
Permutation permutation_from_json(const Json& j);
NilpTriple triple_from_json(const Json& j);
DyckPair dyck_pair_from_json(const Json& j);

// {"class": ..., "payload": ...}
Json make_envelope(const std::string& object_class, const Json& payload);
std::pair<std::string, Json> parse_envelope(const Json& j);

} // namespace baxter
