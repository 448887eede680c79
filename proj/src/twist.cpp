#include "coherent/twist.hpp"

#include <cmath>

#include "coherent/linalg.hpp"

namespace coherent {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

const Rat& Twist::hbar() const {
    if (mode_ != Mode::RealExponential)
        throw DomainError("CoefficientMismatch", "twist is not real-exponential");
    return scale_;
}

const Rat& Twist::tau() const {
    if (mode_ != Mode::Circle)
        throw DomainError("CoefficientMismatch", "twist is not a circle twist");
    return scale_;
}

std::complex<double> Twist::value(int a, int b) const {
    const Rat& f = exponent_.value({a, b});
    if (mode_ == Mode::RealExponential)
        return {std::exp(as_double(scale_ * f)), 0.0};
    const double theta = kTwoPi * as_double(f / scale_);
    return {std::cos(theta), std::sin(theta)};
}

Twist exp_twist(const Cochain& f, const Rat& hbar) {
    if (f.degree() != 2)
        throw DomainError("IndexOutOfRange", "twist exponents have degree 2",
                          {{"degree", std::to_string(f.degree())}});
    if (f.coefficients().kind != CoefficientGroup::Kind::Rationals)
        throw DomainError("CoefficientMismatch",
                          "real-exponential twists need rational exponents");
    if (!is_cocycle(f))
        throw DomainError("NotACocycle", "exponent fails the additive cocycle identity");
    return Twist(Twist::Mode::RealExponential, hbar, f);
}

Twist circle_twist(const Cochain& f) {
    if (f.degree() != 2)
        throw DomainError("IndexOutOfRange", "twist exponents have degree 2",
                          {{"degree", std::to_string(f.degree())}});
    if (f.coefficients().kind != CoefficientGroup::Kind::ModTau)
        throw DomainError("CoefficientMismatch",
                          "circle twists need mod-tau exponents");
    if (!is_cocycle(f))
        throw DomainError("NotACocycle", "exponent fails the additive cocycle identity");
    return Twist(Twist::Mode::Circle, f.coefficients().tau, f);
}

bool verify_twist(const Twist& t) {
    // f(a,b) f(ab,c) = f(b,c) f(a,bc) is exactly additivity of exponents,
    // in the rationals or mod tau depending on the mode.
    const auto& sg = t.semigroup();
    const auto& f = t.exponent();
    const auto& coeffs = f.coefficients();
    for (const auto& triple : sg.composable_tuples(3)) {
        const int a = triple[0], b = triple[1], c = triple[2];
        Rat lhs = f.value({a, b}) + f.value({sg.product(a, b), c});
        Rat rhs = f.value({b, c}) + f.value({a, sg.product(b, c)});
        if (coeffs.canonical(lhs) != coeffs.canonical(rhs)) return false;
    }
    return true;
}

bool verify_twist_values(
    const SemigroupTable& sg,
    const std::map<std::pair<int, int>, std::complex<double>>& values,
    double tol) {
    auto get = [&](int a, int b) {
        auto it = values.find({a, b});
        if (it == values.end())
            throw DomainError("MissingValue", "no value for a composable pair",
                              {{"left", sg.element(a)}, {"right", sg.element(b)}});
        return it->second;
    };
    for (const auto& triple : sg.composable_tuples(3)) {
        const int a = triple[0], b = triple[1], c = triple[2];
        const auto lhs = get(a, b) * get(sg.product(a, b), c);
        const auto rhs = get(b, c) * get(a, sg.product(b, c));
        const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
        if (std::abs(lhs - rhs) > tol * scale) return false;
    }
    return true;
}

AlgebraElement AlgebraElement::basis(std::shared_ptr<const SemigroupTable> sg,
                                     const std::string& name) {
    AlgebraElement e(sg);
    const int i = sg->index_of(name);
    if (!sg->is_zero(i)) e.terms_[i] = 1.0;
    return e;
}

void AlgebraElement::add(int elem, std::complex<double> coeff) {
    if (sg_->is_zero(elem)) return;
    auto [it, inserted] = terms_.emplace(elem, coeff);
    if (!inserted) it->second += coeff;
}

AlgebraElement star(const Twist& t, const AlgebraElement& u, const AlgebraElement& v) {
    if (!t.semigroup().same_structure(u.semigroup()) ||
        !t.semigroup().same_structure(v.semigroup()))
        throw DomainError("SemigroupMismatch",
                          "twist and operands live over different semigroups");
    const auto& sg = t.semigroup();
    AlgebraElement out(u.semigroup_ptr());
    for (const auto& [a, ca] : u.terms())
        for (const auto& [b, cb] : v.terms()) {
            const int ab = sg.product(a, b);
            if (sg.is_zero(ab)) continue;
            out.add(ab, ca * cb * t.value(a, b));
        }
    return out;
}

TrivialityResult triviality_check(const Twist& t) {
    const auto& sg = t.semigroup();
    const auto& f = t.exponent();
    const auto pairs = sg.composable_tuples(2);
    const auto elems = sg.nonzero();
    std::map<int, int> col;
    for (std::size_t i = 0; i < elems.size(); ++i) col[elems[i]] = static_cast<int>(i);

    linalg::RatMat a(pairs.size(), std::vector<Rat>(elems.size(), Rat(0)));
    std::vector<Rat> rhs(pairs.size());
    for (std::size_t r = 0; r < pairs.size(); ++r) {
        const auto& pr = pairs[r];
        a[r][col.at(pr[0])] += 1;
        a[r][col.at(pr[1])] += 1;
        a[r][col.at(sg.product(pr[0], pr[1]))] -= 1;
        rhs[r] = f.value(pr);
    }

    auto witness_from = [&](const std::vector<Rat>& g,
                            const CoefficientGroup& coeffs) {
        Cochain w(t.semigroup_ptr(), 1, coeffs);
        for (std::size_t i = 0; i < elems.size(); ++i) w.set({elems[i]}, g[i]);
        return w;
    };

    if (t.mode() == Twist::Mode::RealExponential) {
        auto g = linalg::solve(a, rhs);
        if (!g) return {};
        return {true, witness_from(*g, CoefficientGroup::rationals())};
    }

    // Circle mode: delta g = F + tau k must hold for some integer slack
    // vector k.  Project onto the left null space Y of the system matrix:
    // a solution exists iff Y k = -Y F / tau has an integer solution, and
    // any such k turns the problem into a plain rational solve.
    const Rat& tau = t.tau();
    auto y = linalg::integer_left_nullspace(a);
    std::vector<Rat> shifted = rhs;
    if (!y.empty()) {  // full row rank needs no slack at all
        std::vector<Int> target(y.size());
        for (std::size_t i = 0; i < y.size(); ++i) {
            Rat dot = 0;
            for (std::size_t j = 0; j < pairs.size(); ++j)
                if (y[i][j] != 0) dot += Rat(y[i][j]) * rhs[j];
            Rat scaled = -dot / tau;
            if (denominator(scaled) != 1) return {};
            target[i] = numerator(scaled);
        }
        auto k = linalg::solve_integer(y, target);
        if (!k) return {};
        for (std::size_t j = 0; j < pairs.size(); ++j)
            shifted[j] += tau * Rat((*k)[j]);
    }
    auto g = linalg::solve(a, shifted);
    if (!g) return {};  // unreachable: consistency was just arranged
    return {true, witness_from(*g, CoefficientGroup::mod(tau))};
}

Twist restrict_twist(const Twist& t, const std::vector<std::string>& subset) {
    auto sub = std::make_shared<const SemigroupTable>(
        t.semigroup().restrict_to(subset));
    Cochain f(sub, 2, t.exponent().coefficients());
    for (const auto& pr : sub->composable_tuples(2)) {
        const int a = t.semigroup().index_of(sub->element(pr[0]));
        const int b = t.semigroup().index_of(sub->element(pr[1]));
        f.set(pr, t.exponent().value({a, b}));
    }
    return t.mode() == Twist::Mode::RealExponential ? exp_twist(f, t.hbar())
                                                    : circle_twist(f);
}

}
