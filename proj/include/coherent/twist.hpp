#pragma once

#include <complex>
#include <map>
#include <memory>
#include <optional>

#include "coherent/cochain.hpp"

namespace coherent {

// Multiplicative 2-cocycle f on the composable pairs, i.e.
//   f(a, b) f(ab, c) = f(b, c) f(a, bc)
// whenever abc != 0, stored through its exponent cochain F:
//   RealExponential: f = exp(hbar * F),  F an exact rational 2-cocycle;
//   Circle:          f = exp(2 pi i F / tau),  F a 2-cocycle mod tau.
// Either way the multiplicative identity is exactly the additive cocycle
// condition on F, so twists built here are exact by construction.
class Twist {
public:
    enum class Mode { RealExponential, Circle };

    Mode mode() const { return mode_; }
    const Rat& hbar() const;  // RealExponential only
    const Rat& tau() const;   // Circle only
    const Cochain& exponent() const { return exponent_; }
    const SemigroupTable& semigroup() const { return exponent_.semigroup(); }
    const std::shared_ptr<const SemigroupTable>& semigroup_ptr() const {
        return exponent_.semigroup_ptr();
    }

    // f(a, b) as a complex number (real positive in RealExponential mode,
    // unit modulus in Circle mode).
    std::complex<double> value(int a, int b) const;

private:
    friend Twist exp_twist(const Cochain&, const Rat&);
    friend Twist circle_twist(const Cochain&);
    Twist(Mode mode, Rat scale, Cochain exponent)
        : mode_(mode), scale_(std::move(scale)), exponent_(std::move(exponent)) {}

    Mode mode_;
    Rat scale_;  // hbar or tau
    Cochain exponent_;
};

// exp(hbar * F) for an exact rational 2-cocycle F (error NotACocycle).
// The family law exp_twist(F, h) * exp_twist(F, h') = exp_twist(F, h + h')
// holds exactly at the exponent level.
Twist exp_twist(const Cochain& f, const Rat& hbar);

// exp(2 pi i F / tau) for a 2-cocycle F with mod-tau coefficients.
Twist circle_twist(const Cochain& f);

// Exact check of the multiplicative 2-cocycle identity via exponents.
bool verify_twist(const Twist& t);

// Tolerance check of raw multiplicative values on composable pairs; every
// composable pair must be present (error MissingValue).
bool verify_twist_values(
    const SemigroupTable& sg,
    const std::map<std::pair<int, int>, std::complex<double>>& values,
    double tol = 1e-12);

// Element of the semigroup algebra with complex coefficients.
class AlgebraElement {
public:
    explicit AlgebraElement(std::shared_ptr<const SemigroupTable> sg)
        : sg_(std::move(sg)) {}
    static AlgebraElement basis(std::shared_ptr<const SemigroupTable> sg,
                                const std::string& name);

    const SemigroupTable& semigroup() const { return *sg_; }
    const std::shared_ptr<const SemigroupTable>& semigroup_ptr() const { return sg_; }
    std::map<int, std::complex<double>>& terms() { return terms_; }
    const std::map<int, std::complex<double>>& terms() const { return terms_; }
    void add(int elem, std::complex<double> coeff);

private:
    std::shared_ptr<const SemigroupTable> sg_;
    std::map<int, std::complex<double>> terms_;  // zero never appears
};

// a * b = f(a, b) ab extended bilinearly; zero products drop out.
AlgebraElement star(const Twist& t, const AlgebraElement& u, const AlgebraElement& v);

struct TrivialityResult {
    bool trivial = false;
    // 1-cochain g on the nonzero elements with (delta g)(a,b) =
    // g(a) + g(b) - g(ab) equal to the exponent (mod tau in Circle mode).
    std::optional<Cochain> witness;
};

// Decides whether the twist is a multiplicative coboundary
// f(a,b) = g(a) g(b) / g(ab).  RealExponential mode solves delta g = F over
// the rationals; Circle mode solves delta g = F + tau k with integer slack
// k per equation, via a Smith-style reduction after clearing denominators.
TrivialityResult triviality_check(const Twist& t);

// Twist restricted to a product-closed subset (error NotClosed).
Twist restrict_twist(const Twist& t, const std::vector<std::string>& subset);

}
