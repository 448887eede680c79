#pragma once

// Shared fixtures for the test binaries: small posets and complexes, the
// truncated quantum plane, matrix units, and seeded random instances.

#include <map>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "coherent/cochain.hpp"
#include "coherent/semigroup.hpp"
#include "coherent/simplicial.hpp"

namespace testing {

using coherent::Cochain;
using coherent::CoefficientGroup;
using coherent::Poset;
using coherent::Rat;
using coherent::SemigroupTable;

using SgPtr = std::shared_ptr<const SemigroupTable>;

inline SgPtr shared(SemigroupTable sg) {
    return std::make_shared<const SemigroupTable>(std::move(sg));
}

inline Poset chain_poset() { return Poset({"a", "b"}, {{"a", "b"}}); }

inline Poset antichain_poset() { return Poset({"a", "b"}, {}); }

inline coherent::SimplicialComplex triangle_complex() {
    return coherent::SimplicialComplex(
        {"v0", "v1", "v2"}, {{"v0", "v1"}, {"v1", "v2"}, {"v0", "v2"}});
}

inline coherent::SimplicialComplex tetra_complex() {
    return coherent::SimplicialComplex({"t0", "t1", "t2", "t3"},
                                       {{"t0", "t1", "t2"},
                                        {"t0", "t1", "t3"},
                                        {"t0", "t2", "t3"},
                                        {"t1", "t2", "t3"}});
}

// Face posets of the boundary complexes (poset elements named after the
// simplices, e.g. "t0|t1").
inline Poset triangle_poset() { return coherent::barycentric_subdivision(triangle_complex()); }
inline Poset tetra_poset() { return coherent::barycentric_subdivision(tetra_complex()); }

// Matrix units e(i;j) for all i, j in {1, 2}: e(i;j) e(k;l) = e(i;l) when
// j == k, else 0.  Not an interval semigroup of any poset (both e(1;2)
// and e(2;1) exist), so built directly.
inline SemigroupTable matrix_units() {
    const std::vector<std::string> ids{"1", "2"};
    std::vector<std::string> elems{"0"};
    auto name = [](const std::string& i, const std::string& j) {
        return "e(" + i + ";" + j + ")";
    };
    for (const auto& i : ids)
        for (const auto& j : ids) elems.push_back(name(i, j));
    std::map<std::pair<std::string, std::string>, std::string> prod;
    for (const auto& i : ids)
        for (const auto& j : ids)
            for (const auto& k : ids)
                for (const auto& l : ids)
                    prod[{name(i, j), name(k, l)}] = j == k ? name(i, l) : "0";
    coherent::ObjectSpec objs;
    for (const auto& i : ids) objs.objects.push_back(name(i, i));
    for (const auto& i : ids)
        for (const auto& j : ids) {
            objs.start[name(i, j)] = name(i, i);
            objs.end[name(i, j)] = name(j, j);
        }
    return SemigroupTable::from_table(elems, "0", prod, objs);
}

// Exponent pairs (a, b) of every monomial x^a y^b with a + b <= max_degree,
// keyed by element index in the given semigroup.
inline std::map<int, std::pair<int, int>> monomial_exponents(const SemigroupTable& sg,
                                                             int max_degree) {
    std::map<int, std::pair<int, int>> out;
    for (int a = 0; a + 0 <= max_degree; ++a)
        for (int b = 0; a + b <= max_degree; ++b)
            out[sg.index_of(coherent::monomial_name({a, b}))] = {a, b};
    return out;
}

// The standard symplectic 2-cocycle on the truncated quantum plane:
// F(x^{a1} y^{b1}, x^{a2} y^{b2}) = (a1 b2 - b1 a2) / 2.
inline Cochain quantum_plane_cocycle(const SgPtr& sg, int max_degree) {
    auto exps = monomial_exponents(*sg, max_degree);
    Cochain f(sg, 2, CoefficientGroup::rationals());
    for (const auto& pair : sg->composable_tuples(2)) {
        auto [a1, b1] = exps.at(pair[0]);
        auto [a2, b2] = exps.at(pair[1]);
        f.set(pair, Rat(static_cast<long>(a1) * b2 - static_cast<long>(b1) * a2, 2));
    }
    return f;
}

// Deterministic small random instances for property tests.  Shapes rotate
// through posets, quivers, and monomial semigroups; every instance carries
// object structure and has at most `max_elements` elements.
inline SemigroupTable random_semigroup(std::mt19937_64& rng, int max_elements = 10) {
    for (;;) {
        SemigroupTable sg = [&] {
            switch (rng() % 3) {
                case 0: {  // random poset on 2-3 points
                    const int n = 2 + static_cast<int>(rng() % 2);
                    std::vector<std::string> el;
                    for (int i = 0; i < n; ++i) el.push_back(std::string(1, char('a' + i)));
                    std::vector<std::pair<std::string, std::string>> rel;
                    for (int i = 0; i < n; ++i)
                        for (int j = i + 1; j < n; ++j)
                            if (rng() % 2) rel.push_back({el[i], el[j]});
                    return coherent::poset_semigroup(Poset(el, rel));
                }
                case 1: {  // random quiver on 2 nodes with 1-2 arrows
                    coherent::Quiver q;
                    q.nodes = {"u", "v"};
                    const int arrows = 1 + static_cast<int>(rng() % 2);
                    for (int i = 0; i < arrows; ++i) {
                        const bool fwd = rng() % 2;
                        q.arrows.push_back({"a" + std::to_string(i),
                                            fwd ? "u" : "v", fwd ? "v" : "u"});
                    }
                    q.max_len = 1 + static_cast<int>(rng() % 2);
                    return coherent::quiver_path_semigroup(q);
                }
                default: {  // truncated monomials
                    const int vars = 1 + static_cast<int>(rng() % 2);
                    const int deg = vars == 1 ? 1 + static_cast<int>(rng() % 3) : 2;
                    return coherent::monomial_semigroup(vars, deg);
                }
            }
        }();
        if (sg.size() <= max_elements) return sg;
    }
}

// Uniform small rational in [-3, 3] with denominator 1..4.
inline Rat random_rational(std::mt19937_64& rng) {
    const long num = static_cast<long>(rng() % 25) - 12;
    const long den = 1 + static_cast<long>(rng() % 4);
    return Rat(num, den);
}

// Random cochain of the given degree with small rational values.
inline Cochain random_cochain(const SgPtr& sg, int degree, std::mt19937_64& rng,
                              CoefficientGroup coeffs = CoefficientGroup::rationals()) {
    Cochain f(sg, degree, coeffs);
    if (degree == 0) {
        for (int obj : sg->object_indices()) f.set({obj}, random_rational(rng));
    } else {
        for (const auto& t : sg->composable_tuples(degree)) f.set(t, random_rational(rng));
    }
    return f;
}

}  // namespace testing
