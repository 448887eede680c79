#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coherent/json_io.hpp"
#include "helpers.hpp"

using namespace coherent;
using testing::shared;

TEST_CASE("semigroup serialization round-trips") {
    SemigroupTable sg = testing::matrix_units();
    Json j = save_semigroup(sg);
    SemigroupTable back = load_semigroup(j);
    CHECK(back.same_structure(sg));
    CHECK(back.has_objects());
    CHECK(save_semigroup(back).dump() == j.dump());

    SemigroupTable mono = monomial_semigroup(2, 3);
    CHECK(load_semigroup(save_semigroup(mono)).same_structure(mono));
}

TEST_CASE("poset files take the reflexive transitive closure") {
    Json j = parse_json(R"({
        "elements": ["a", "b", "c"],
        "relations": [["a", "b"], ["b", "c"]]
    })");
    Poset p = load_poset(j);
    CHECK(p.leq(p.index_of("a"), p.index_of("c")));
    CHECK(p.leq(p.index_of("a"), p.index_of("a")));
    SemigroupTable sg = poset_semigroup(p);
    CHECK(sg.nonzero().size() == 6);
}

TEST_CASE("quiver files accept bounded and unbounded lengths") {
    Json j = parse_json(R"({
        "nodes": ["u"],
        "arrows": [{"label": "a", "from": "u", "to": "u"}],
        "max_len": 2
    })");
    Quiver q = load_quiver(j);
    REQUIRE(q.max_len.has_value());
    CHECK(*q.max_len == 2);
    CHECK(quiver_path_semigroup(q).nonzero().size() == 3);  // e(u), a, a*a

    j["max_len"] = nullptr;
    Quiver open = load_quiver(j);
    CHECK_FALSE(open.max_len.has_value());
    CHECK_THROWS_AS(quiver_path_semigroup(open), DomainError);
}

TEST_CASE("cochain serialization round-trips both coefficient kinds") {
    auto sg = shared(monomial_semigroup(2, 4));
    Cochain f = testing::quantum_plane_cocycle(sg, 4);
    Json j = save_cochain(f);
    Cochain back = load_cochain(sg, j);
    CHECK(back.degree() == 2);
    for (const auto& [key, v] : f.values()) CHECK(back.value(key) == v);
    CHECK(save_cochain(back).dump() == j.dump());

    Json jm = parse_json(R"({
        "degree": 1,
        "coeffs": {"kind": "mod", "tau": "4"},
        "values": [{"args": ["x"], "value": "-1/3"}]
    })");
    Cochain m = load_cochain(sg, jm);
    CHECK(m.value({sg->index_of("x")}) == Rat(11, 3));  // canonical mod 4
}

TEST_CASE("twist files stand alone") {
    auto sg = shared(monomial_semigroup(2, 4));
    Twist t = exp_twist(testing::quantum_plane_cocycle(sg, 4), Rat(1, 10));
    Json j = save_twist(t);
    CHECK(j.at("mode") == "real");
    CHECK(j.contains("semigroup"));
    LoadedTwist lt = load_twist(j);
    CHECK(lt.twist.mode() == Twist::Mode::RealExponential);
    CHECK(lt.twist.hbar() == Rat(1, 10));
    CHECK(lt.semigroup->same_structure(*sg));
    CHECK(save_twist(lt.twist).dump() == j.dump());

    auto ex = export_sphere_twist(SphereTriangulation::Tetrahedral);
    Json jc = save_twist(ex.twist);
    CHECK(jc.at("mode") == "circle");
    LoadedTwist back = load_twist(jc);
    CHECK(back.twist.tau() == 4);
    CHECK(verify_twist(back.twist));
    for (const auto& [key, v] : ex.twist.exponent().values())
        CHECK(back.twist.exponent().value(key) == v);
}

TEST_CASE("simplicial complex files") {
    Json j = parse_json(R"({
        "vertices": ["a", "b", "c", "d"],
        "maximal_simplices": [["a","b","c"], ["a","b","d"], ["a","c","d"], ["b","c","d"]]
    })");
    SimplicialComplex k = load_complex(j);
    CHECK(k.simplices().size() == 14);
    CHECK(simplicial_betti(k, 2) == std::vector<long>{1, 0, 1});
}

TEST_CASE("path files carry their space tag") {
    Json jp = parse_json(R"({"space": "plane", "vertices": [[0,0],[0,2],[3,2]]})");
    PlanePolyline p = load_plane_path(jp);
    CHECK(p.length() == doctest::Approx(5.0));

    Json js = parse_json(R"({"space": "sphere", "vertices": [[1,0,0],[0,1,0]]})");
    SphereGeodesicPath s = load_sphere_path(js);
    CHECK(s.radius() == 1.0);
    CHECK(s.length() == doctest::Approx(1.5707963267948966));

    js["radius"] = 2.0;
    CHECK(load_sphere_path(js).length() == doctest::Approx(3.141592653589793));

    CHECK_THROWS_AS(load_plane_path(js), DomainError);
    CHECK_THROWS_AS(load_sphere_path(jp), DomainError);
}

TEST_CASE("schema violations are reported as such") {
    CHECK_THROWS_WITH_AS(parse_json("{nope"), doctest::Contains("parse"),
                         DomainError);

    auto sg = shared(monomial_semigroup(2, 3));
    for (const char* text : {
             R"({"relations": [["a","b"]]})",                       // missing elements
             R"({"elements": ["a"], "relations": [["a"]]})",        // arity
             R"({"elements": ["a"], "relations": [["a","b"]]})",    // unknown element
         }) {
        CHECK_THROWS_AS(load_poset(parse_json(text)), DomainError);
    }

    CHECK_THROWS_AS(load_semigroup(parse_json(
                        R"({"elements": ["0","a"], "zero": "0",
                            "table": {"a": "a"}})")),
                    DomainError);  // malformed pair key
    CHECK_THROWS_AS(load_cochain(sg, parse_json(
                        R"({"degree": 1,
                            "coeffs": {"kind": "galois"},
                            "values": []})")),
                    DomainError);  // unknown coefficient kind
    CHECK_THROWS_AS(load_cochain(sg, parse_json(
                        R"({"degree": 1,
                            "coeffs": {"kind": "rationals"},
                            "values": [{"args": ["w"], "value": "1"}]})")),
                    DomainError);  // unknown element name

    Json t = save_twist(exp_twist(testing::quantum_plane_cocycle(sg, 3), Rat(1)));
    t["mode"] = "imaginary";
    CHECK_THROWS_AS(load_twist(t), DomainError);
}

TEST_CASE("file io errors carry the path") {
    try {
        read_file("/nonexistent/nowhere.json");
        FAIL("expected an io error");
    } catch (const DomainError& e) {
        CHECK(e.variant() == "IoError");
        CHECK(e.details().at("path") == "/nonexistent/nowhere.json");
    }
}

TEST_CASE("serialization is deterministic") {
    auto ex = export_sphere_twist(SphereTriangulation::Tetrahedral);
    CHECK(save_twist(ex.twist).dump(2) == save_twist(ex.twist).dump(2));
    SemigroupTable sg = testing::matrix_units();
    CHECK(save_semigroup(sg).dump() == save_semigroup(sg).dump());
}
