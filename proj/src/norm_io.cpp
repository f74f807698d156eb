#include "mink/norm_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace mink {

namespace {

using nlohmann::json;

double parse_p(const json& j) {
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "inf" || s == "Inf" || s == "infinity" || s == "Infinity") return kLpInf;
        throw SpecError("p", "unrecognized value '" + s + "'");
    }
    if (!j.is_number()) throw SpecError("p", "must be a number or \"inf\"");
    return j.get<double>();
}

} // namespace

NormedPlane load_plane_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SpecError("(root)", std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
        throw SpecError("type", "norm spec must be an object with a string \"type\"");
    const std::string type = j["type"].get<std::string>();

    if (type == "euclidean") return NormedPlane(PlaneSpec::euclidean());

    if (type == "lp") {
        if (!j.contains("p")) throw SpecError("p", "missing");
        return NormedPlane(PlaneSpec::lp(parse_p(j["p"])));
    }

    if (type == "inner_product") {
        if (!j.contains("matrix")) throw SpecError("matrix", "missing");
        const json& m = j["matrix"];
        if (!m.is_array() || m.size() != 2 || !m[0].is_array() || m[0].size() != 2 ||
            !m[1].is_array() || m[1].size() != 2)
            throw SpecError("matrix", "must be a 2x2 array");
        double a = m[0][0].get<double>(), b = m[0][1].get<double>();
        double b2 = m[1][0].get<double>(), c = m[1][1].get<double>();
        if (b != b2) throw SpecError("matrix[1][0]", "matrix must be symmetric");
        return NormedPlane(PlaneSpec::inner_product(a, b, c));
    }

    if (type == "polygon") {
        if (!j.contains("vertices") || !j["vertices"].is_array())
            throw SpecError("vertices", "missing or not an array");
        std::vector<Vec2> verts;
        const json& arr = j["vertices"];
        verts.reserve(arr.size());
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const json& v = arr[i];
            if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
                throw SpecError("vertices[" + std::to_string(i) + "]",
                                "must be a pair of numbers");
            verts.push_back({v[0].get<double>(), v[1].get<double>()});
        }
        return NormedPlane(PlaneSpec::polygon(std::move(verts)));
    }

    if (type == "regular_polygon") {
        if (!j.contains("n") || !j["n"].is_number_integer())
            throw SpecError("n", "missing or not an integer");
        double rot = 0.0;
        if (j.contains("rotation")) {
            if (!j["rotation"].is_number()) throw SpecError("rotation", "must be a number");
            rot = j["rotation"].get<double>();
        }
        return NormedPlane(PlaneSpec::regular_polygon(j["n"].get<int>(), rot));
    }

    throw SpecError("type", "unknown norm type '" + type + "'");
}

NormedPlane load_plane_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecError("(file)", "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_plane_from_json(ss.str());
}

} // namespace mink
