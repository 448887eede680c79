#include "coherent/cochain.hpp"

#include <algorithm>

#include "coherent/linalg.hpp"

namespace coherent {

namespace {

constexpr std::size_t kRankGuard = 20000;

std::vector<std::vector<int>> domain_of(const SemigroupTable& sg, int degree) {
    if (degree == 0) {
        std::vector<std::vector<int>> keys;
        if (sg.has_objects())
            for (int o : sg.object_indices()) keys.push_back({o});
        return keys;
    }
    return sg.composable_tuples(degree);
}

void require_same_semigroup(const Cochain& f, const Cochain& g) {
    if (!f.semigroup().same_structure(g.semigroup()))
        throw DomainError("SemigroupMismatch",
                          "cochains are defined over different semigroups");
}

}  // namespace

CoefficientGroup CoefficientGroup::mod(const Rat& tau) {
    if (tau <= 0)
        throw DomainError("NonpositiveTau", "modulus must be positive",
                          {{"tau", rational_string(tau)}});
    return {Kind::ModTau, tau};
}

Rat CoefficientGroup::canonical(const Rat& v) const {
    return kind == Kind::Rationals ? v : mod_tau(v, tau);
}

Cochain::Cochain(std::shared_ptr<const SemigroupTable> sg, int degree,
                 CoefficientGroup coeffs)
    : sg_(std::move(sg)), degree_(degree), coeffs_(coeffs) {
    if (degree < 0)
        throw DomainError("IndexOutOfRange", "cochain degree must be nonnegative",
                          {{"degree", std::to_string(degree)}});
    if (degree == 0 && !sg_->has_objects())
        throw DomainError("Degree0WithoutObjects",
                          "degree-0 cochains need object structure");
    for (auto& key : domain_of(*sg_, degree)) values_[key] = 0;
}

const Rat& Cochain::value(const std::vector<int>& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) {
        std::string names;
        for (std::size_t i = 0; i < key.size(); ++i) {
            if (i) names += ",";
            names += key[i] >= 0 && key[i] < sg_->size() ? sg_->element(key[i])
                                                         : std::to_string(key[i]);
        }
        throw DomainError("MissingValue", "tuple is outside the cochain domain",
                          {{"tuple", names}});
    }
    return it->second;
}

void Cochain::set(const std::vector<int>& key, const Rat& v) {
    auto it = values_.find(key);
    if (it == values_.end()) {
        value(key);  // throws MissingValue with a readable payload
    }
    it->second = coeffs_.canonical(v);
}

bool Cochain::is_zero_cochain() const {
    return std::all_of(values_.begin(), values_.end(),
                       [&](const auto& kv) { return kv.second == 0; });
}

Cochain coboundary(const Cochain& f) {
    const auto& sg = f.semigroup();
    const int n = f.degree();
    Cochain out(f.semigroup_ptr(), n + 1, f.coefficients());
    if (n == 0) {
        // Degree-0 construction of f already guaranteed object structure.
        for (int a : sg.nonzero()) {
            Rat v = f.value({sg.end_of(a)}) - f.value({sg.start_of(a)});
            out.set({a}, v);
        }
        return out;
    }
    for (const auto& t : sg.composable_tuples(n + 1)) {
        Rat acc = f.value(std::vector<int>(t.begin() + 1, t.end()));
        int sign = -1;
        for (int i = 0; i < n; ++i) {
            std::vector<int> contracted;
            contracted.reserve(n);
            contracted.insert(contracted.end(), t.begin(), t.begin() + i);
            contracted.push_back(sg.product(t[i], t[i + 1]));
            contracted.insert(contracted.end(), t.begin() + i + 2, t.end());
            acc += sign * f.value(contracted);
            sign = -sign;
        }
        acc += sign * f.value(std::vector<int>(t.begin(), t.end() - 1));
        out.set(t, acc);
    }
    return out;
}

bool is_cocycle(const Cochain& f) {
    return coboundary(f).is_zero_cochain();
}

Cochain cup(const Cochain& f, const Cochain& g) {
    require_same_semigroup(f, g);
    if (f.coefficients().kind != CoefficientGroup::Kind::Rationals ||
        g.coefficients().kind != CoefficientGroup::Kind::Rationals)
        throw DomainError("CoefficientMismatch",
                          "cup products need exact rational coefficients");
    const int m = f.degree(), n = g.degree();
    if (m < 1 || n < 1)
        throw DomainError("IndexOutOfRange", "cup factors must have degree >= 1");
    const auto& sg = f.semigroup();
    Cochain out(f.semigroup_ptr(), m + n, CoefficientGroup::rationals());
    for (const auto& t : sg.composable_tuples(m + n)) {
        std::vector<int> left(t.begin(), t.begin() + m);
        std::vector<int> right(t.begin() + m, t.end());
        out.set(t, f.value(left) * g.value(right));
    }
    return out;
}

Cochain comp(const Cochain& f, const Cochain& g, int i) {
    require_same_semigroup(f, g);
    if (f.coefficients().kind != CoefficientGroup::Kind::Rationals ||
        g.coefficients().kind != CoefficientGroup::Kind::Rationals)
        throw DomainError("CoefficientMismatch",
                          "composition products need exact rational coefficients");
    const int m = f.degree(), n = g.degree();
    if (m < 1 || n < 1)
        throw DomainError("IndexOutOfRange", "composition factors must have degree >= 1");
    if (i < 1 || i > m)
        throw DomainError("IndexOutOfRange", "slot must satisfy 1 <= i <= m",
                          {{"i", std::to_string(i)}, {"m", std::to_string(m)}});
    const auto& sg = f.semigroup();
    Cochain out(f.semigroup_ptr(), m + n - 1, CoefficientGroup::rationals());
    for (const auto& t : sg.composable_tuples(m + n - 1)) {
        std::vector<int> outer(t.begin(), t.begin() + (i - 1));
        std::vector<int> inner(t.begin() + (i - 1), t.begin() + (i - 1) + n);
        outer.push_back(sg.product_of(inner));
        outer.insert(outer.end(), t.begin() + (i - 1) + n, t.end());
        out.set(t, f.value(outer) * g.value(inner));
    }
    return out;
}

Cochain reduce_mod(const Cochain& f, const Rat& tau) {
    if (f.coefficients().kind != CoefficientGroup::Kind::Rationals)
        throw DomainError("CoefficientMismatch",
                          "reduce_mod expects exact rational input");
    Cochain out(f.semigroup_ptr(), f.degree(), CoefficientGroup::mod(tau));
    for (const auto& [k, v] : f.values()) out.set(k, v);
    return out;
}

RankReport cohomology_rank(const std::shared_ptr<const SemigroupTable>& sg, int n,
                           bool cc0_zero) {
    if (n < 0)
        throw DomainError("IndexOutOfRange", "degree must be nonnegative");
    const auto& s = *sg;

    // delta_0 as a matrix over the object functions.
    auto delta0 = [&]() -> linalg::RatMat {
        linalg::RatMat m;
        if (cc0_zero || !s.has_objects()) return m;
        const auto& objs = s.object_indices();
        std::map<int, int> col;
        for (std::size_t i = 0; i < objs.size(); ++i) col[objs[i]] = static_cast<int>(i);
        for (int a : s.nonzero()) {
            std::vector<Rat> row(objs.size(), Rat(0));
            row[col[s.end_of(a)]] += 1;
            row[col[s.start_of(a)]] -= 1;
            m.push_back(std::move(row));
        }
        return m;
    };

    // delta_n (n >= 1) as a matrix from degree-n to degree-(n+1) cochains.
    auto delta = [&](int deg) -> linalg::RatMat {
        const auto dom = s.composable_tuples(deg, kRankGuard);
        const auto codom = s.composable_tuples(deg + 1, kRankGuard);
        std::map<std::vector<int>, int> col;
        for (std::size_t i = 0; i < dom.size(); ++i) col[dom[i]] = static_cast<int>(i);
        linalg::RatMat m(codom.size(), std::vector<Rat>(dom.size(), Rat(0)));
        for (std::size_t r = 0; r < codom.size(); ++r) {
            const auto& t = codom[r];
            m[r][col.at(std::vector<int>(t.begin() + 1, t.end()))] += 1;
            int sign = -1;
            for (int i = 0; i < deg; ++i) {
                std::vector<int> contracted;
                contracted.reserve(deg);
                contracted.insert(contracted.end(), t.begin(), t.begin() + i);
                contracted.push_back(s.product(t[i], t[i + 1]));
                contracted.insert(contracted.end(), t.begin() + i + 2, t.end());
                m[r][col.at(contracted)] += sign;
                sign = -sign;
            }
            m[r][col.at(std::vector<int>(t.begin(), t.end() - 1))] += sign;
        }
        return m;
    };

    RankReport rep;
    if (n == 0) {
        const long dim0 =
            (cc0_zero || !s.has_objects()) ? 0 : static_cast<long>(s.object_indices().size());
        const long r0 = dim0 ? linalg::rank(delta0()) : 0;
        rep.dim_cocycles = dim0 - r0;
        rep.dim_coboundaries = 0;
        rep.dim_cohomology = rep.dim_cocycles;
        return rep;
    }
    const long dim_n = static_cast<long>(s.composable_tuples(n, kRankGuard).size());
    const long rank_n = linalg::rank(delta(n));
    rep.dim_cocycles = dim_n - rank_n;
    rep.dim_coboundaries = n == 1 ? (delta0().empty() ? 0 : linalg::rank(delta0()))
                                  : linalg::rank(delta(n - 1));
    rep.dim_cohomology = rep.dim_cocycles - rep.dim_coboundaries;
    return rep;
}

}
