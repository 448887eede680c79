#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "coherent/geometry.hpp"
#include "coherent/twist.hpp"
#include "helpers.hpp"

using namespace coherent;
using testing::shared;

namespace {

bool close(std::complex<double> a, std::complex<double> b, double tol = 1e-12) {
    return std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
}

std::map<std::pair<int, int>, std::complex<double>> value_map(const Twist& t) {
    std::map<std::pair<int, int>, std::complex<double>> out;
    for (const auto& p : t.semigroup().composable_tuples(2))
        out[{p[0], p[1]}] = t.value(p[0], p[1]);
    return out;
}

}  // namespace

TEST_CASE("quantum plane star product relations") {
    auto sg = shared(monomial_semigroup(2, 4));
    Cochain f = testing::quantum_plane_cocycle(sg, 4);
    for (const Rat& hbar : {Rat(1, 10), Rat(1)}) {
        Twist t = exp_twist(f, hbar);
        CHECK(verify_twist(t));
        const double hb = as_double(hbar);
        auto x = AlgebraElement::basis(sg, "x");
        auto y = AlgebraElement::basis(sg, "y");
        auto xy = star(t, x, y);
        REQUIRE(xy.terms().size() == 1);
        const int xy_idx = sg->index_of("x*y");
        CHECK(close(xy.terms().at(xy_idx), std::exp(hb / 2)));
        auto yx = star(t, y, x);
        CHECK(close(yx.terms().at(xy_idx), std::exp(-hb / 2)));
        // x*y = e^hbar y*x
        CHECK(close(xy.terms().at(xy_idx),
                    std::exp(hb) * yx.terms().at(xy_idx)));
    }
}

TEST_CASE("star with the identity twist is the ordinary product") {
    auto sg = shared(monomial_semigroup(2, 4));
    Cochain zero(sg, 2, CoefficientGroup::rationals());
    Twist t = exp_twist(zero, Rat(1));
    auto x2 = AlgebraElement::basis(sg, "x^2");
    auto y = AlgebraElement::basis(sg, "y");
    auto prod = star(t, x2, y);
    REQUIRE(prod.terms().size() == 1);
    CHECK(prod.terms().at(sg->index_of("x^2*y")) == std::complex<double>(1, 0));
    // truncated product vanishes
    auto x4 = AlgebraElement::basis(sg, "x^4");
    CHECK(star(t, x4, AlgebraElement::basis(sg, "x")).terms().empty());
}

TEST_CASE("star is bilinear") {
    auto sg = shared(monomial_semigroup(2, 4));
    Twist t = exp_twist(testing::quantum_plane_cocycle(sg, 4), Rat(1, 2));
    AlgebraElement u(sg);
    u.add(sg->index_of("x"), {1, 0});
    u.add(sg->index_of("y"), {2, 0});
    auto v = AlgebraElement::basis(sg, "y");
    auto w = star(t, u, v);
    CHECK(close(w.terms().at(sg->index_of("x*y")), std::exp(0.25)));
    CHECK(close(w.terms().at(sg->index_of("y^2")), {2, 0}));
}

TEST_CASE("star associativity on all basis triples") {
    auto sg = shared(monomial_semigroup(2, 3));
    Twist t = exp_twist(testing::quantum_plane_cocycle(sg, 3), Rat(1, 10));
    for (int a : sg->nonzero())
        for (int b : sg->nonzero())
            for (int c : sg->nonzero()) {
                AlgebraElement ea(sg), eb(sg), ec(sg);
                ea.add(a, {1, 0});
                eb.add(b, {1, 0});
                ec.add(c, {1, 0});
                auto left = star(t, star(t, ea, eb), ec);
                auto right = star(t, ea, star(t, eb, ec));
                CHECK(left.terms().size() == right.terms().size());
                for (const auto& [k, coeff] : left.terms())
                    CHECK(close(coeff, right.terms().at(k)));
            }
}

TEST_CASE("one-parameter family law at the level of values") {
    auto sg = shared(monomial_semigroup(2, 3));
    Cochain f = testing::quantum_plane_cocycle(sg, 3);
    Twist a = exp_twist(f, Rat(1, 3));
    Twist b = exp_twist(f, Rat(1, 4));
    Twist c = exp_twist(f, Rat(7, 12));
    for (const auto& p : sg->composable_tuples(2))
        CHECK(close(a.value(p[0], p[1]) * b.value(p[0], p[1]), c.value(p[0], p[1])));
    CHECK(a.hbar() == Rat(1, 3));
}

TEST_CASE("verify_twist_values flags a perturbed pair") {
    auto sg = shared(monomial_semigroup(2, 4));
    Twist t = exp_twist(testing::quantum_plane_cocycle(sg, 4), Rat(1));
    auto values = value_map(t);
    CHECK(verify_twist_values(*sg, values));

    auto broken = values;
    broken[{sg->index_of("x"), sg->index_of("y")}] *= 2.0;
    CHECK_FALSE(verify_twist_values(*sg, broken));

    std::map<std::pair<int, int>, std::complex<double>> ones;
    for (const auto& [k, v] : values) ones[k] = {1, 0};
    CHECK(verify_twist_values(*sg, ones));

    auto missing = values;
    missing.erase(missing.begin());
    CHECK_THROWS_AS(verify_twist_values(*sg, missing), DomainError);
}

TEST_CASE("twist constructors reject bad exponents") {
    auto mu = shared(testing::matrix_units());
    std::mt19937_64 rng(17);
    Cochain bad = testing::random_cochain(mu, 2, rng);
    bad.set({mu->index_of("e(1;2)"), mu->index_of("e(2;1)")}, Rat(7, 3));
    CHECK_THROWS_WITH_AS(exp_twist(bad, Rat(1)), doctest::Contains("cocycle"),
                         DomainError);

    Cochain wrong_coeffs = testing::random_cochain(mu, 2, rng,
                                                   CoefficientGroup::mod(Rat(2)));
    CHECK_THROWS_AS(exp_twist(wrong_coeffs, Rat(1)), DomainError);
    Cochain rational(mu, 2, CoefficientGroup::rationals());
    CHECK_THROWS_AS(circle_twist(rational), DomainError);

    Cochain deg1(mu, 1, CoefficientGroup::rationals());
    CHECK_THROWS_AS(exp_twist(deg1, Rat(1)), DomainError);
}

TEST_CASE("mode accessors are guarded") {
    auto sg = shared(monomial_semigroup(2, 3));
    Twist real = exp_twist(testing::quantum_plane_cocycle(sg, 3), Rat(1));
    CHECK_THROWS_AS(real.tau(), DomainError);
    Cochain zero(sg, 2, CoefficientGroup::mod(Rat(4)));
    Twist circ = circle_twist(zero);
    CHECK(circ.tau() == 4);
    CHECK_THROWS_AS(circ.hbar(), DomainError);
    CHECK(close(circ.value(sg->index_of("x"), sg->index_of("y")), {1, 0}));
}

TEST_CASE("triviality round-trip: real coboundaries are trivial") {
    std::mt19937_64 rng(20260817);
    for (int inst = 0; inst < 20; ++inst) {
        auto sg = shared(testing::random_semigroup(rng));
        Cochain g = testing::random_cochain(sg, 1, rng);
        Twist t = exp_twist(coboundary(g), Rat(2));
        TrivialityResult r = triviality_check(t);
        REQUIRE(r.trivial);
        REQUIRE(r.witness.has_value());
        Cochain back = coboundary(*r.witness);
        const Cochain& want = t.exponent();
        for (const auto& [key, v] : want.values()) CHECK(back.value(key) == v);
    }
}

TEST_CASE("triviality round-trip: circle coboundaries are trivial") {
    std::mt19937_64 rng(424242);
    const Rat tau(4);
    for (int inst = 0; inst < 20; ++inst) {
        auto sg = shared(testing::random_semigroup(rng));
        Cochain g = testing::random_cochain(sg, 1, rng, CoefficientGroup::mod(tau));
        Twist t = circle_twist(coboundary(g));
        TrivialityResult r = triviality_check(t);
        REQUIRE(r.trivial);
        REQUIRE(r.witness.has_value());
        Cochain back = coboundary(*r.witness);  // values canonical mod tau
        const Cochain& want = t.exponent();
        for (const auto& [key, v] : want.values())
            CHECK(mod_tau(back.value(key) - v, tau) == 0);
    }
}

TEST_CASE("a genuinely nontrivial real twist is detected") {
    // the symplectic cochain on the quantum plane pairs nontrivially with
    // the composable pair (x, y) minus (y, x): any coboundary delta g has
    // delta g(x,y) = delta g(y,x) by commutativity, but F(x,y) != F(y,x).
    auto sg = shared(monomial_semigroup(2, 4));
    Twist t = exp_twist(testing::quantum_plane_cocycle(sg, 4), Rat(1));
    TrivialityResult r = triviality_check(t);
    CHECK_FALSE(r.trivial);
    CHECK_FALSE(r.witness.has_value());
}

TEST_CASE("sphere twist exponent: nontrivial over the rationals, trivial mod 4") {
    auto exported = export_sphere_twist(SphereTriangulation::Tetrahedral);
    const Cochain& exponent = exported.twist.exponent();

    // circle mode: the total area 4 pi is a whole multiple of the taille,
    // so the solver finds a logarithm
    TrivialityResult circ = triviality_check(exported.twist);
    CHECK(circ.trivial);
    REQUIRE(circ.witness.has_value());
    Cochain back = coboundary(*circ.witness);
    for (const auto& [key, v] : exponent.values())
        CHECK(mod_tau(back.value(key) - v, Rat(4)) == 0);

    // real mode: lift canonical representatives in [0, 4) back to signed
    // areas in (-2, 2); the lift is an exact rational cocycle whose pairing
    // with the fundamental 2-cycle of the sphere is 4, not 0
    Cochain lift(exported.semigroup, 2, CoefficientGroup::rationals());
    for (const auto& [key, v] : exponent.values())
        lift.set(key, v < 2 ? v : v - 4);
    Twist real = exp_twist(lift, Rat(1));
    TrivialityResult r = triviality_check(real);
    CHECK_FALSE(r.trivial);
}

TEST_CASE("restricting a twist to a closed subset") {
    auto sg = shared(monomial_semigroup(2, 4));
    Twist t = exp_twist(testing::quantum_plane_cocycle(sg, 4), Rat(1));
    Twist xs = restrict_twist(t, {"1", "x", "x^2", "x^3", "x^4"});
    CHECK(xs.semigroup().nonzero().size() == 5);
    // the symplectic form vanishes on powers of x: identity twist
    for (const auto& p : xs.semigroup().composable_tuples(2))
        CHECK(xs.value(p[0], p[1]) == std::complex<double>(1, 0));
    CHECK(triviality_check(xs).trivial);
    CHECK_THROWS_AS(restrict_twist(t, {"x"}), DomainError);
}

TEST_CASE("star rejects mismatched semigroups") {
    auto sg3 = shared(monomial_semigroup(2, 3));
    auto sg4 = shared(monomial_semigroup(2, 4));
    Twist t = exp_twist(testing::quantum_plane_cocycle(sg4, 4), Rat(1));
    auto a = AlgebraElement::basis(sg3, "x");
    auto b = AlgebraElement::basis(sg4, "y");
    CHECK_THROWS_AS(star(t, a, b), DomainError);
}

TEST_CASE("algebra elements accumulate coefficients") {
    auto sg = shared(monomial_semigroup(2, 3));
    AlgebraElement u(sg);
    u.add(sg->index_of("x"), {1, 0});
    u.add(sg->index_of("x"), {2, 0});
    CHECK(u.terms().at(sg->index_of("x")) == std::complex<double>(3, 0));
    CHECK_THROWS_AS(AlgebraElement::basis(sg, "w"), DomainError);
}
