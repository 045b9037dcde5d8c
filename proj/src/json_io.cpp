#include "baxter/json_io.hpp"

namespace baxter {

Json to_json(const TreeLikeTableau& t) {
    Json points = Json::array();
    for (Cell c : t.points()) points.push_back(Json::array({c.row, c.col}));
    return Json{{"shape", t.shape().rows()}, {"points", points}};
}

namespace {

Json tiles_json(const std::vector<Tile>& tiles) {
    Json out = Json::array();
    for (const Tile& t : tiles)
        out.push_back(Json{{"x", t.x}, {"y", t.y}, {"w", t.w}, {"h", t.h}});
    return out;
}

std::vector<Tile> tiles_from_json(const Json& j) {
    require(j.is_array(), Err::InvalidObject, "tiles must be an array");
    std::vector<Tile> tiles;
    for (const Json& t : j) {
        require(t.is_object() && t.contains("x") && t.contains("y") && t.contains("w") &&
                    t.contains("h"),
                Err::InvalidObject, "tile needs x, y, w, h");
        tiles.push_back({t["x"].get<int>(), t["y"].get<int>(), t["w"].get<int>(),
                         t["h"].get<int>()});
    }
    return tiles;
}

std::string step_string(const Json& j, const char* field) {
    require(j.contains(field) && j[field].is_string(), Err::InvalidObject,
            std::string("missing step string: ") + field);
    std::string s = j[field].get<std::string>();
    require_steps(s);
    return s;
}

} // namespace

Json to_json(const PackedFloorplan& f) {
    return Json{{"height", f.height}, {"width", f.width}, {"tiles", tiles_json(f.tiles)},
                {"packed", true}};
}

Json to_json(const Floorplan& f) {
    return Json{{"height", f.height}, {"width", f.width}, {"tiles", tiles_json(f.tiles)},
                {"packed", false}};
}

Json to_json(const Permutation& p) { return Json(p.values()); }

Json to_json(const NilpTriple& t) {
    return Json{{"n", t.size()},
                {"top", t.top.steps},
                {"middle", t.middle.steps},
                {"bottom", t.bottom.steps}};
}

Json to_json(const DyckPair& d) {
    return Json{{"upper", d.upper.steps}, {"lower", d.lower.steps}};
}

Json to_json(const CheckResult& c) {
    Json j{{"check", c.check}, {"n", c.n}, {"status", c.pass ? "pass" : "fail"}};
    if (!c.witness.empty()) j["witness"] = c.witness;
    if (c.experimental) j["experimental"] = true;
    return j;
}

TreeLikeTableau tlt_from_json(const Json& j) {
    require(j.is_object() && j.contains("shape") && j.contains("points"), Err::InvalidObject,
            "tableau needs shape and points");
    std::vector<int> rows;
    for (const Json& r : j["shape"]) rows.push_back(r.get<int>());
    std::vector<Cell> points;
    for (const Json& p : j["points"]) {
        require(p.is_array() && p.size() == 2, Err::InvalidObject, "point must be [row,col]");
        points.push_back({p[0].get<int>(), p[1].get<int>()});
    }
    return validate_tlt(FerrersShape(rows), points);
}

PackedFloorplan pfp_from_json(const Json& j) {
    require(j.is_object() && j.contains("height") && j.contains("width") && j.contains("tiles"),
            Err::InvalidObject, "floorplan needs height, width, tiles");
    return validate_pfp(j["height"].get<int>(), j["width"].get<int>(),
                        tiles_from_json(j["tiles"]));
}

Floorplan floorplan_from_json(const Json& j) {
    require(j.is_object() && j.contains("height") && j.contains("width") && j.contains("tiles"),
            Err::InvalidObject, "floorplan needs height, width, tiles");
    return validate_floorplan(j["height"].get<int>(), j["width"].get<int>(),
                              tiles_from_json(j["tiles"]));
}

Permutation permutation_from_json(const Json& j) {
    if (j.is_string()) return Permutation::parse(j.get<std::string>());
    require(j.is_array(), Err::InvalidObject, "permutation must be an array or string");
    std::vector<int> vals;
    for (const Json& v : j) vals.push_back(v.get<int>());
    try {
        return Permutation(vals);
    } catch (const BaxterError&) {
        fail(Err::InvalidObject, "values do not form a permutation");
    }
}

NilpTriple triple_from_json(const Json& j) {
    require(j.is_object(), Err::InvalidObject, "triple must be an object");
    return validate_triple(step_string(j, "top"), step_string(j, "middle"),
                           step_string(j, "bottom"));
}

DyckPair dyck_pair_from_json(const Json& j) {
    require(j.is_object(), Err::InvalidObject, "dyck pair must be an object");
    DyckPair d{{{0, 0}, step_string(j, "upper")}, {{0, 0}, step_string(j, "lower")}};
    return d;
}

Json make_envelope(const std::string& object_class, const Json& payload) {
    return Json{{"class", object_class}, {"payload", payload}};
}

std::pair<std::string, Json> parse_envelope(const Json& j) {
    require(j.is_object() && j.contains("class") && j.contains("payload"), Err::InvalidObject,
            "envelope needs class and payload");
    return {j["class"].get<std::string>(), j["payload"]};
}

} // namespace baxter
