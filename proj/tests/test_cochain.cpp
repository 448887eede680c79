#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "coherent/cochain.hpp"
#include "helpers.hpp"

using namespace coherent;
using testing::shared;

namespace {

// Independent rank oracle: assembles the coboundary matrices from the
// definition (no shared code with cohomology_rank) and row-reduces them
// with plain fraction elimination.
int oracle_rank(std::vector<std::vector<Rat>> m) {
    if (m.empty()) return 0;
    const std::size_t cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[rank], m[piv]);
        const Rat inv = m[rank][c];
        for (auto& x : m[rank]) x /= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][c] == 0) continue;
            const Rat f = m[r][c];
            for (std::size_t k = 0; k < cols; ++k) m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

// delta_n matrix rows indexed by (n+1)-tuples, columns by n-tuples (or
// objects at n = 0), built straight from the alternating-sum formula.
std::vector<std::vector<Rat>> oracle_delta(const SemigroupTable& sg, int n) {
    if (n == 0) {
        const auto& objs = sg.object_indices();
        std::map<int, int> col;
        for (std::size_t i = 0; i < objs.size(); ++i) col[objs[i]] = static_cast<int>(i);
        std::vector<std::vector<Rat>> rows;
        for (const auto& t : sg.composable_tuples(1)) {
            std::vector<Rat> row(objs.size(), 0);
            row[col.at(sg.end_of(t[0]))] += 1;
            row[col.at(sg.start_of(t[0]))] -= 1;
            rows.push_back(std::move(row));
        }
        return rows;
    }
    const auto dom = sg.composable_tuples(n);
    std::map<std::vector<int>, int> col;
    for (std::size_t i = 0; i < dom.size(); ++i) col[dom[i]] = static_cast<int>(i);
    std::vector<std::vector<Rat>> rows;
    for (const auto& t : sg.composable_tuples(n + 1)) {
        std::vector<Rat> row(dom.size(), 0);
        row[col.at({t.begin() + 1, t.end()})] += 1;
        int sign = -1;
        for (int i = 0; i < n; ++i) {
            std::vector<int> face(t.begin(), t.end());
            face[i] = sg.product(t[i], t[i + 1]);
            face.erase(face.begin() + i + 1);
            row[col.at(face)] += sign;
            sign = -sign;
        }
        row[col.at({t.begin(), t.end() - 1})] += sign;
        rows.push_back(std::move(row));
    }
    return rows;
}

RankReport oracle_ranks(const SemigroupTable& sg, int n, bool cc0_zero) {
    const long dim_c = n == 0 ? (cc0_zero ? 0 : static_cast<long>(sg.object_indices().size()))
                              : static_cast<long>(sg.composable_tuples(n).size());
    const long rk_n = (n == 0 && cc0_zero) ? 0 : oracle_rank(oracle_delta(sg, n));
    long rk_prev = 0;
    if (n == 1 && !cc0_zero && sg.has_objects()) rk_prev = oracle_rank(oracle_delta(sg, 0));
    if (n >= 2) rk_prev = oracle_rank(oracle_delta(sg, n - 1));
    RankReport r;
    r.dim_cocycles = dim_c - rk_n;
    r.dim_coboundaries = rk_prev;
    r.dim_cohomology = r.dim_cocycles - r.dim_coboundaries;
    return r;
}

}  // namespace

TEST_CASE("hand coboundary on the chain interval semigroup") {
    auto sg = shared(poset_semigroup(testing::chain_poset()));
    const int eaa = sg->index_of("e(a;a)");
    const int eab = sg->index_of("e(a;b)");
    const int ebb = sg->index_of("e(b;b)");

    Cochain f(sg, 1, CoefficientGroup::rationals());
    f.set({eab}, 5);
    CHECK(is_cocycle(f));  // delta f = 0 on all four composable pairs

    // f is the coboundary of g with g(a) = 0, g(b) = 5
    Cochain g(sg, 0, CoefficientGroup::rationals());
    g.set({ebb}, 5);
    Cochain dg = coboundary(g);
    CHECK(dg.value({eab}) == 5);
    CHECK(dg.value({eaa}) == 0);
    CHECK(dg.value({ebb}) == 0);

    // a non-cocycle: value on the idempotent makes delta nonzero
    Cochain h(sg, 1, CoefficientGroup::rationals());
    h.set({eaa}, 1);
    CHECK_FALSE(is_cocycle(h));  // delta h(eaa, eaa) = 1 - 1 + 1 = 1
    CHECK(coboundary(h).value({eaa, eaa}) == 1);
}

TEST_CASE("degree-0 coboundary needs objects") {
    auto sg = shared(SemigroupTable::from_table({"0", "a"}, "0", {{{"a", "a"}, "a"}}));
    CHECK_THROWS_AS(Cochain(sg, 0, CoefficientGroup::rationals()), DomainError);
}

TEST_CASE("coboundary squared vanishes on random instances") {
    std::mt19937_64 rng(7);
    for (int inst = 0; inst < 50; ++inst) {
        auto sg = shared(testing::random_semigroup(rng));
        for (int degree = 0; degree <= 3; ++degree) {
            Cochain f = testing::random_cochain(sg, degree, rng);
            CHECK(coboundary(coboundary(f)).is_zero_cochain());
        }
    }
}

TEST_CASE("coboundary squared vanishes mod tau as well") {
    std::mt19937_64 rng(8);
    auto sg = shared(poset_semigroup(testing::triangle_poset()));
    for (int degree = 0; degree <= 2; ++degree) {
        Cochain f = testing::random_cochain(sg, degree, rng,
                                            CoefficientGroup::mod(Rat(5, 2)));
        CHECK(coboundary(coboundary(f)).is_zero_cochain());
    }
}

TEST_CASE("symplectic exponent cochain on monomials is a 2-cocycle") {
    auto sg = shared(monomial_semigroup(2, 4));
    Cochain f = testing::quantum_plane_cocycle(sg, 4);
    CHECK(is_cocycle(f));

    // F(u, v) = deg_x(u) * deg_y(v) is also a cocycle
    auto exps = testing::monomial_exponents(*sg, 4);
    Cochain g(sg, 2, CoefficientGroup::rationals());
    for (const auto& t : sg->composable_tuples(2))
        g.set(t, Rat(exps.at(t[0]).first) * exps.at(t[1]).second);
    CHECK(is_cocycle(g));
}

TEST_CASE("generic 2-cochain on matrix units is not a cocycle") {
    auto sg = shared(testing::matrix_units());
    std::mt19937_64 rng(99);
    Cochain f = testing::random_cochain(sg, 2, rng);
    f.set({sg->index_of("e(1;2)"), sg->index_of("e(2;1)")}, Rat(355, 113));
    CHECK_FALSE(is_cocycle(f));
}

TEST_CASE("cup product: values, Leibniz rule, associativity") {
    auto sg = shared(poset_semigroup(testing::triangle_poset()));
    std::mt19937_64 rng(11);
    Cochain f = testing::random_cochain(sg, 1, rng);
    Cochain g = testing::random_cochain(sg, 1, rng);
    Cochain h = testing::random_cochain(sg, 1, rng);

    Cochain fg = cup(f, g);
    CHECK(fg.degree() == 2);
    for (const auto& t : sg->composable_tuples(2))
        CHECK(fg.value(t) == f.value({t[0]}) * g.value({t[1]}));

    // delta(f cup g) = delta f cup g - f cup delta g for 1-cochains
    Cochain lhs = coboundary(fg);
    Cochain d1 = cup(coboundary(f), g);
    Cochain d2 = cup(f, coboundary(g));
    for (const auto& t : sg->composable_tuples(3))
        CHECK(lhs.value(t) == d1.value(t) - d2.value(t));

    Cochain left = cup(cup(f, g), h);
    Cochain right = cup(f, cup(g, h));
    for (const auto& t : sg->composable_tuples(3))
        CHECK(left.value(t) == right.value(t));
}

TEST_CASE("cup rejects mixed coefficients and degree 0") {
    auto sg = shared(poset_semigroup(testing::chain_poset()));
    std::mt19937_64 rng(3);
    Cochain f = testing::random_cochain(sg, 1, rng);
    Cochain m = testing::random_cochain(sg, 1, rng, CoefficientGroup::mod(Rat(2)));
    CHECK_THROWS_AS(cup(f, m), DomainError);
    Cochain g0 = testing::random_cochain(sg, 0, rng);
    CHECK_THROWS_AS(cup(g0, f), DomainError);
}

TEST_CASE("composition products insert at the chosen slot") {
    auto sg = shared(testing::matrix_units());
    std::mt19937_64 rng(13);
    Cochain f = testing::random_cochain(sg, 2, rng);
    Cochain g = testing::random_cochain(sg, 2, rng);

    Cochain c2 = comp(f, g, 2);
    CHECK(c2.degree() == 3);
    for (const auto& t : sg->composable_tuples(3)) {
        const int inner = sg->product(t[1], t[2]);
        CHECK(c2.value(t) == f.value({t[0], inner}) * g.value({t[1], t[2]}));
    }

    Cochain c1 = comp(f, g, 1);
    for (const auto& t : sg->composable_tuples(3)) {
        const int inner = sg->product(t[0], t[1]);
        CHECK(c1.value(t) == f.value({inner, t[2]}) * g.value({t[0], t[1]}));
    }

    CHECK_THROWS_AS(comp(f, g, 0), DomainError);
    CHECK_THROWS_AS(comp(f, g, 3), DomainError);
}

TEST_CASE("reduce_mod canonicalizes into [0, tau)") {
    auto sg = shared(poset_semigroup(testing::chain_poset()));
    Cochain f(sg, 1, CoefficientGroup::rationals());
    f.set({sg->index_of("e(a;b)")}, Rat(9, 2));
    f.set({sg->index_of("e(a;a)")}, -1);
    Cochain r = reduce_mod(f, 4);
    CHECK(r.coefficients().kind == CoefficientGroup::Kind::ModTau);
    CHECK(r.value({sg->index_of("e(a;b)")}) == Rat(1, 2));
    CHECK(r.value({sg->index_of("e(a;a)")}) == 3);
}

TEST_CASE("mod-tau cochains store canonical representatives") {
    auto sg = shared(poset_semigroup(testing::chain_poset()));
    Cochain f(sg, 1, CoefficientGroup::mod(Rat(4)));
    f.set({sg->index_of("e(a;b)")}, Rat(-1, 3));
    CHECK(f.value({sg->index_of("e(a;b)")}) == Rat(11, 3));
    CHECK_THROWS_AS(CoefficientGroup::mod(0), DomainError);
    CHECK_THROWS_AS(CoefficientGroup::mod(Rat(-1)), DomainError);
}

TEST_CASE("frozen cohomology ranks") {
    SUBCASE("two-element chain: H = (1, 0, 0, 0)") {
        auto sg = shared(poset_semigroup(testing::chain_poset()));
        const long expect_z[] = {1, 1, 2, 2};
        const long expect_b[] = {0, 1, 2, 2};
        for (int n = 0; n <= 3; ++n) {
            RankReport r = cohomology_rank(sg, n);
            CHECK(r.dim_cocycles == expect_z[n]);
            CHECK(r.dim_coboundaries == expect_b[n]);
            CHECK(r.dim_cohomology == expect_z[n] - expect_b[n]);
        }
    }
    SUBCASE("antichain: H^0 = 2, H^n = 0 for n >= 1") {
        auto sg = shared(poset_semigroup(testing::antichain_poset()));
        CHECK(cohomology_rank(sg, 0).dim_cohomology == 2);
        for (int n = 1; n <= 3; ++n)
            CHECK(cohomology_rank(sg, n).dim_cohomology == 0);
    }
    SUBCASE("triangle boundary: H = (1, 1, 0)") {
        auto sg = shared(poset_semigroup(testing::triangle_poset()));
        CHECK(cohomology_rank(sg, 0).dim_cohomology == 1);
        CHECK(cohomology_rank(sg, 1).dim_cohomology == 1);
        CHECK(cohomology_rank(sg, 2).dim_cohomology == 0);
    }
    SUBCASE("tetrahedron boundary: H = (1, 0, 1)") {
        auto sg = shared(poset_semigroup(testing::tetra_poset()));
        CHECK(cohomology_rank(sg, 0).dim_cohomology == 1);
        CHECK(cohomology_rank(sg, 1).dim_cohomology == 0);
        RankReport r2 = cohomology_rank(sg, 2);
        CHECK(r2.dim_cocycles == 38);
        CHECK(r2.dim_coboundaries == 37);
        CHECK(r2.dim_cohomology == 1);
    }
    SUBCASE("cc0-zero convention: nothing bounds in degree 1") {
        auto sg = shared(poset_semigroup(testing::chain_poset()));
        RankReport r0 = cohomology_rank(sg, 0, true);
        CHECK(r0.dim_cocycles == 0);
        CHECK(r0.dim_cohomology == 0);
        RankReport r1 = cohomology_rank(sg, 1, true);
        CHECK(r1.dim_cocycles == 1);
        CHECK(r1.dim_coboundaries == 0);
        CHECK(r1.dim_cohomology == 1);
        auto tet = shared(poset_semigroup(testing::tetra_poset()));
        CHECK(cohomology_rank(tet, 1, true).dim_cohomology == 13);
        CHECK(cohomology_rank(tet, 2, true).dim_cohomology == 1);
    }
    SUBCASE("semigroup without objects reports zero in degree 0") {
        auto sg = shared(SemigroupTable::from_table({"0", "a"}, "0",
                                                    {{{"a", "a"}, "a"}}));
        RankReport r = cohomology_rank(sg, 0);
        CHECK(r.dim_cocycles == 0);
        CHECK(r.dim_cohomology == 0);
    }
}

TEST_CASE("ranks agree with the independent dense oracle") {
    std::vector<SemigroupTable> instances;
    instances.push_back(poset_semigroup(testing::chain_poset()));
    instances.push_back(poset_semigroup(testing::antichain_poset()));
    instances.push_back(poset_semigroup(testing::triangle_poset()));
    instances.push_back(testing::matrix_units());
    instances.push_back(monomial_semigroup(2, 2));
    for (auto& inst : instances) {
        auto sg = shared(std::move(inst));
        for (int n = 0; n <= 3; ++n) {
            if (sg->composable_tuples(std::max(n, 1)).size() > 200) continue;
            for (bool cc0 : {false, true}) {
                RankReport got = cohomology_rank(sg, n, cc0);
                RankReport want = oracle_ranks(*sg, n, cc0);
                CHECK(got.dim_cocycles == want.dim_cocycles);
                CHECK(got.dim_coboundaries == want.dim_coboundaries);
                CHECK(got.dim_cohomology == want.dim_cohomology);
                CHECK(got.dim_cocycles >= got.dim_coboundaries);
                CHECK(got.dim_coboundaries >= 0);
            }
        }
    }
}

TEST_CASE("rank computation is guarded against huge domains") {
    auto sg = shared(monomial_semigroup(3, 5));
    CHECK_THROWS_AS(cohomology_rank(sg, 5), DomainError);
}

TEST_CASE("missing-value and mismatch errors") {
    auto sg = shared(poset_semigroup(testing::chain_poset()));
    Cochain f(sg, 1, CoefficientGroup::rationals());
    CHECK_THROWS_WITH_AS(f.value({sg->zero()}),
                         doctest::Contains("outside the cochain domain"), DomainError);
    auto other = shared(poset_semigroup(testing::antichain_poset()));
    Cochain g(other, 1, CoefficientGroup::rationals());
    CHECK_THROWS_AS(cup(f, g), DomainError);
}
