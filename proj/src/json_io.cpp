#include "coherent/json_io.hpp"

#include <fstream>
#include <sstream>

namespace coherent {

namespace {

[[noreturn]] void schema_error(const std::string& what) {
    throw DomainError("SchemaError", what);
}

const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name))
        schema_error(std::string("missing field \"") + name + "\"");
    return j.at(name);
}

std::vector<std::string> string_list(const Json& j, const char* name) {
    const Json& arr = field(j, name);
    if (!arr.is_array()) schema_error(std::string(name) + " must be an array");
    std::vector<std::string> out;
    for (const auto& x : arr) {
        if (!x.is_string()) schema_error(std::string(name) + " entries must be strings");
        out.push_back(x.get<std::string>());
    }
    return out;
}

}  // namespace

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const std::exception& e) {
        throw DomainError("ParseError", e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("IoError", "cannot read file", {{"path", path}});
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DomainError("IoError", "cannot write file", {{"path", path}});
    out << content;
    if (!out) throw DomainError("IoError", "write failed", {{"path", path}});
}

Poset load_poset(const Json& j) {
    auto elements = string_list(j, "elements");
    const Json& rels = field(j, "relations");
    if (!rels.is_array()) schema_error("relations must be an array of pairs");
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& r : rels) {
        if (!r.is_array() || r.size() != 2 || !r[0].is_string() || !r[1].is_string())
            schema_error("each relation must be a pair of element names");
        pairs.emplace_back(r[0].get<std::string>(), r[1].get<std::string>());
    }
    return Poset(std::move(elements), pairs);
}

Quiver load_quiver(const Json& j) {
    Quiver q;
    q.nodes = string_list(j, "nodes");
    const Json& arrows = field(j, "arrows");
    if (!arrows.is_array()) schema_error("arrows must be an array");
    for (const auto& a : arrows) {
        QuiverArrow arrow;
        arrow.label = field(a, "label").get<std::string>();
        arrow.from = field(a, "from").get<std::string>();
        arrow.to = field(a, "to").get<std::string>();
        q.arrows.push_back(std::move(arrow));
    }
    if (j.contains("max_len") && !j.at("max_len").is_null()) {
        if (!j.at("max_len").is_number_integer())
            schema_error("max_len must be an integer or null");
        q.max_len = j.at("max_len").get<int>();
    }
    return q;
}

SemigroupTable load_semigroup(const Json& j) {
    auto elements = string_list(j, "elements");
    const std::string zero = field(j, "zero").get<std::string>();
    const Json& table = field(j, "table");
    if (!table.is_object()) schema_error("table must be an object");
    std::map<std::pair<std::string, std::string>, std::string> product;
    for (const auto& [key, value] : table.items()) {
        const auto comma = key.find(',');
        if (comma == std::string::npos || key.find(',', comma + 1) != std::string::npos)
            schema_error("table keys must be \"a,b\" pairs");
        if (!value.is_string()) schema_error("table values must be element names");
        product[{key.substr(0, comma), key.substr(comma + 1)}] = value.get<std::string>();
    }
    std::optional<ObjectSpec> objects;
    if (j.contains("objects") && !j.at("objects").is_null()) {
        const Json& o = j.at("objects");
        ObjectSpec spec;
        spec.objects = string_list(o, "objects");
        for (const auto& [k, v] : field(o, "start").items())
            spec.start[k] = v.get<std::string>();
        for (const auto& [k, v] : field(o, "end").items())
            spec.end[k] = v.get<std::string>();
        objects = std::move(spec);
    }
    return SemigroupTable::from_table(elements, zero, product, objects);
}

Json save_semigroup(const SemigroupTable& sg) {
    Json j;
    j["elements"] = sg.elements();
    j["zero"] = sg.element(sg.zero());
    Json table = Json::object();
    for (int a = 0; a < sg.size(); ++a)
        for (int b = 0; b < sg.size(); ++b)
            table[sg.element(a) + "," + sg.element(b)] = sg.element(sg.product(a, b));
    j["table"] = std::move(table);
    if (sg.has_objects()) {
        Json o;
        std::vector<std::string> names;
        for (int i : sg.object_indices()) names.push_back(sg.element(i));
        o["objects"] = names;
        Json start = Json::object(), end = Json::object();
        for (int i : sg.nonzero()) {
            start[sg.element(i)] = sg.element(sg.start_of(i));
            end[sg.element(i)] = sg.element(sg.end_of(i));
        }
        o["start"] = std::move(start);
        o["end"] = std::move(end);
        j["objects"] = std::move(o);
    }
    return j;
}

namespace {

CoefficientGroup load_coeffs(const Json& j) {
    const std::string kind = field(j, "kind").get<std::string>();
    if (kind == "rationals") return CoefficientGroup::rationals();
    if (kind == "mod")
        return CoefficientGroup::mod(parse_rational(field(j, "tau").get<std::string>()));
    schema_error("coeffs.kind must be \"rationals\" or \"mod\"");
}

}  // namespace

Cochain load_cochain(std::shared_ptr<const SemigroupTable> sg, const Json& j) {
    const int degree = field(j, "degree").get<int>();
    Cochain f(sg, degree, load_coeffs(field(j, "coeffs")));
    const Json& values = field(j, "values");
    if (!values.is_array()) schema_error("values must be an array");
    for (const auto& entry : values) {
        const auto args = string_list(entry, "args");
        std::vector<int> key;
        for (const auto& name : args) key.push_back(sg->index_of(name));
        f.set(key, parse_rational(field(entry, "value").get<std::string>()));
    }
    return f;
}

Json save_cochain(const Cochain& f) {
    Json j;
    j["degree"] = f.degree();
    if (f.coefficients().kind == CoefficientGroup::Kind::Rationals) {
        j["coeffs"] = {{"kind", "rationals"}};
    } else {
        j["coeffs"] = {{"kind", "mod"}, {"tau", rational_string(f.coefficients().tau)}};
    }
    Json values = Json::array();
    const auto& sg = f.semigroup();
    for (const auto& [key, v] : f.values()) {
        Json entry;
        Json args = Json::array();
        for (int i : key) args.push_back(sg.element(i));
        entry["args"] = std::move(args);
        entry["value"] = rational_string(v);
        values.push_back(std::move(entry));
    }
    j["values"] = std::move(values);
    return j;
}

LoadedTwist load_twist(const Json& j) {
    auto sg = std::make_shared<const SemigroupTable>(
        load_semigroup(field(j, "semigroup")));
    Cochain f = load_cochain(sg, j);
    const std::string mode = field(j, "mode").get<std::string>();
    if (mode == "real") {
        const Rat hbar = parse_rational(field(j, "hbar").get<std::string>());
        return {sg, exp_twist(f, hbar)};
    }
    if (mode == "circle") {
        if (f.coefficients().kind != CoefficientGroup::Kind::ModTau)
            schema_error("circle twists need mod coefficients");
        return {sg, circle_twist(f)};
    }
    schema_error("mode must be \"real\" or \"circle\"");
}

Json save_twist(const Twist& t) {
    Json j = save_cochain(t.exponent());
    j["semigroup"] = save_semigroup(t.semigroup());
    if (t.mode() == Twist::Mode::RealExponential) {
        j["mode"] = "real";
        j["hbar"] = rational_string(t.hbar());
    } else {
        j["mode"] = "circle";
        j["tau"] = rational_string(t.tau());
    }
    return j;
}

SimplicialComplex load_complex(const Json& j) {
    auto vertices = string_list(j, "vertices");
    const Json& maximal = field(j, "maximal_simplices");
    if (!maximal.is_array()) schema_error("maximal_simplices must be an array");
    std::vector<std::vector<std::string>> simplices;
    for (const auto& s : maximal) {
        if (!s.is_array()) schema_error("each simplex must be an array of vertices");
        std::vector<std::string> names;
        for (const auto& v : s) names.push_back(v.get<std::string>());
        simplices.push_back(std::move(names));
    }
    return SimplicialComplex(std::move(vertices), simplices);
}

namespace {

void check_space(const Json& j, const char* expected) {
    if (field(j, "space").get<std::string>() != expected)
        schema_error(std::string("path space must be \"") + expected + "\"");
}

}  // namespace

PlanePolyline load_plane_path(const Json& j) {
    check_space(j, "plane");
    std::vector<Vec2> vertices;
    for (const auto& v : field(j, "vertices")) {
        if (!v.is_array() || v.size() != 2) schema_error("plane vertices are [q, p]");
        vertices.push_back({v[0].get<double>(), v[1].get<double>()});
    }
    return PlanePolyline(std::move(vertices));
}

SphereGeodesicPath load_sphere_path(const Json& j) {
    check_space(j, "sphere");
    std::vector<Vec3> vertices;
    for (const auto& v : field(j, "vertices")) {
        if (!v.is_array() || v.size() != 3) schema_error("sphere vertices are [x, y, z]");
        vertices.push_back({v[0].get<double>(), v[1].get<double>(), v[2].get<double>()});
    }
    const double radius = j.contains("radius") ? j.at("radius").get<double>() : 1.0;
    return SphereGeodesicPath(std::move(vertices), radius);
}

}
