#pragma once

#include <map>
#include <memory>
#include <vector>

#include "coherent/rational.hpp"
#include "coherent/semigroup.hpp"

namespace coherent {

// Values live either in the exact rationals or in the circle group Q mod
// tau; mod-tau values are kept canonicalized into [0, tau).
struct CoefficientGroup {
    enum class Kind { Rationals, ModTau };
    Kind kind = Kind::Rationals;
    Rat tau = 0;

    static CoefficientGroup rationals() { return {Kind::Rationals, 0}; }
    static CoefficientGroup mod(const Rat& tau);

    Rat canonical(const Rat& v) const;
    bool is_zero(const Rat& v) const { return canonical(v) == 0; }
    bool operator==(const CoefficientGroup&) const = default;
};

// Function on the composable n-tuples of a semigroup with zero (n >= 1), or
// on its objects (n = 0).  The value map always covers the whole domain.
class Cochain {
public:
    Cochain(std::shared_ptr<const SemigroupTable> sg, int degree,
            CoefficientGroup coeffs);

    const SemigroupTable& semigroup() const { return *sg_; }
    const std::shared_ptr<const SemigroupTable>& semigroup_ptr() const { return sg_; }
    int degree() const { return degree_; }
    const CoefficientGroup& coefficients() const { return coeffs_; }

    const Rat& value(const std::vector<int>& key) const;  // MissingValue
    void set(const std::vector<int>& key, const Rat& v);  // canonicalizes
    const std::map<std::vector<int>, Rat>& values() const { return values_; }

    bool is_zero_cochain() const;

private:
    std::shared_ptr<const SemigroupTable> sg_;
    int degree_;
    CoefficientGroup coeffs_;
    std::map<std::vector<int>, Rat> values_;
};

// delta F(a_1, ..., a_{n+1}) =
//     F(a_2, ..., a_{n+1})
//   + sum_{i=1..n} (-1)^i F(a_1, ..., a_i a_{i+1}, ..., a_{n+1})
//   + (-1)^{n+1} F(a_1, ..., a_n)
// on composable (n+1)-tuples; every face of a composable tuple is again
// composable because zero is absorbing.  For degree 0 (functions g on the
// objects) it is delta g(a) = g(end a) - g(start a); that requires object
// structure (error: Degree0WithoutObjects).
Cochain coboundary(const Cochain& f);

bool is_cocycle(const Cochain& f);

// (F cup G)(a_1..a_{m+n}) = F(a_1..a_m) * G(a_{m+1}..a_{m+n}).
// Rational coefficients only, degrees >= 1.
Cochain cup(const Cochain& f, const Cochain& g);

// (F o_i G)(a_1..a_{m+n-1}) =
//     F(a_1, .., a_{i-1}, a_i*..*a_{i+n-1}, a_{i+n}, .., a_{m+n-1})
//   * G(a_i, .., a_{i+n-1}),   1 <= i <= m.
Cochain comp(const Cochain& f, const Cochain& g, int i);

// Push rational values into Q mod tau.
Cochain reduce_mod(const Cochain& f, const Rat& tau);

struct RankReport {
    long dim_cocycles = 0;
    long dim_coboundaries = 0;
    long dim_cohomology = 0;
};

// Exact ranks of the degree-n cochain complex over the rationals.  With
// cc0_zero the degree-0 group is treated as 0 (so nothing bounds in degree
// 1); otherwise degree-0 cochains are object functions.  Degree 0 itself
// reports ker(delta_0) as the cocycle dimension.
RankReport cohomology_rank(const std::shared_ptr<const SemigroupTable>& sg, int n,
                           bool cc0_zero = false);

}
