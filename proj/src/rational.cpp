#include "coherent/rational.hpp"

#include <cmath>
#include <cstdlib>

#include "coherent/errors.hpp"

namespace coherent {

Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;  // truncates toward zero
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

Rat mod_tau(const Rat& x, const Rat& tau) {
    if (tau <= 0) {
        throw DomainError("NonpositiveTau", "modulus must be positive",
                          {{"tau", rational_string(tau)}});
    }
    Rat q = x / tau;
    Int k = floor_div(numerator(q), denominator(q));
    return x - Rat(k) * tau;
}

Rat parse_rational(const std::string& text) {
    auto fail = [&]() -> DomainError {
        return DomainError("ParseError", "expected rational \"p\" or \"p/q\"",
                           {{"text", text}});
    };
    if (text.empty()) throw fail();
    std::string num = text, den = "1";
    if (auto slash = text.find('/'); slash != std::string::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    auto check = [&](const std::string& part) {
        if (part.empty()) throw fail();
        std::size_t i = (part[0] == '+' || part[0] == '-') ? 1 : 0;
        if (i == part.size()) throw fail();
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') throw fail();
    };
    check(num);
    check(den);
    Int p(num), q(den);
    if (q == 0) throw fail();
    return Rat(p, q);
}

std::string rational_string(const Rat& x) {
    return x.str();
}

double as_double(const Rat& x) {
    return x.convert_to<double>();
}

Rat nearest_rational(double x, unsigned max_den) {
    // Continued-fraction convergents; the last one with denominator within
    // the cap is the best approximation there.
    bool neg = x < 0;
    double v = neg ? -x : x;
    long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double frac = v;
    for (int step = 0; step < 64; ++step) {
        double fl = std::floor(frac);
        if (fl > 1e15) break;
        long long a = static_cast<long long>(fl);
        long long p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > static_cast<long long>(max_den)) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double rem = frac - fl;
        if (rem < 1e-15) break;
        frac = 1.0 / rem;
    }
    if (q1 == 0) return Rat(0);
    Rat r(p1, q1);
    return neg ? Rat(-r) : r;
}

}
