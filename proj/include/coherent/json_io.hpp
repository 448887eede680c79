#pragma once

#include <memory>
#include <string>

#include <json.hpp>

#include "coherent/cochain.hpp"
#include "coherent/geometry.hpp"
#include "coherent/semigroup.hpp"
#include "coherent/simplicial.hpp"
#include "coherent/twist.hpp"

namespace coherent {

using Json = nlohmann::json;

// Parse/serialize errors surface as DomainError("ParseError"/"SchemaError"),
// file problems as DomainError("IoError").
Json parse_json(const std::string& text);
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// {"elements": [...], "relations": [["a","b"], ...]}; the reflexive and
// transitive closure is taken on load.
Poset load_poset(const Json& j);

// {"nodes": [...], "arrows": [{"label","from","to"}, ...], "max_len": n|null}
Quiver load_quiver(const Json& j);

// {"elements": [...], "zero": "0", "table": {"a,b": "c", ...},
//  "objects": {"objects": [...], "start": {...}, "end": {...}}?}
SemigroupTable load_semigroup(const Json& j);
Json save_semigroup(const SemigroupTable& sg);

// {"degree": n, "coeffs": {"kind": "rationals"} | {"kind": "mod", "tau": "p/q"},
//  "values": [{"args": [...], "value": "p/q"}, ...]}
Cochain load_cochain(std::shared_ptr<const SemigroupTable> sg, const Json& j);
Json save_cochain(const Cochain& f);

// Cochain fields plus "mode": "real" (with "hbar") or "circle" (with
// "tau"), plus an embedded "semigroup" so twist files stand alone.
struct LoadedTwist {
    std::shared_ptr<const SemigroupTable> semigroup;
    Twist twist;
};
LoadedTwist load_twist(const Json& j);
Json save_twist(const Twist& t);

// {"vertices": [...], "maximal_simplices": [[...], ...]}
SimplicialComplex load_complex(const Json& j);

// {"space": "plane", "vertices": [[q, p], ...]}
PlanePolyline load_plane_path(const Json& j);
// {"space": "sphere", "vertices": [[x, y, z], ...], "radius": r?}
SphereGeodesicPath load_sphere_path(const Json& j);

}
