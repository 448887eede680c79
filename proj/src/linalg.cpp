#include "coherent/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace coherent::linalg {

namespace {

// Reduce to row echelon form; returns pivot column per pivot row.
std::vector<int> echelon(RatMat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const std::size_t cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[row], m[pivot]);
        const Rat inv = 1 / m[row][col];
        for (std::size_t j = col; j < cols; ++j) m[row][j] *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col] == 0) continue;
            const Rat f = m[i][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
        }
        pivots.push_back(static_cast<int>(col));
        ++row;
    }
    return pivots;
}

}  // namespace

int rank(RatMat m) {
    return static_cast<int>(echelon(m).size());
}

std::optional<std::vector<Rat>> solve(RatMat a, std::vector<Rat> b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    for (std::size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
    if (rows == 0) return std::vector<Rat>(cols, Rat(0));
    auto pivots = echelon(a);
    // A pivot in the augmented column marks inconsistency.
    if (!pivots.empty() && pivots.back() == static_cast<int>(cols)) return std::nullopt;
    std::vector<Rat> x(cols, Rat(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][cols];
    return x;
}

std::vector<std::vector<Rat>> nullspace(RatMat a) {
    if (a.empty()) return {};
    const std::size_t cols = a[0].size();
    auto pivots = echelon(a);
    std::vector<char> is_pivot(cols, 0);
    for (int p : pivots) is_pivot[p] = 1;
    std::vector<std::vector<Rat>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -a[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

IntMat integer_left_nullspace(const RatMat& a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    RatMat t(cols, std::vector<Rat>(rows));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) t[j][i] = a[i][j];
    auto basis = nullspace(std::move(t));
    IntMat out;
    for (auto& v : basis) {
        Int lcm = 1;
        for (const auto& x : v) {
            Int d = denominator(x);
            lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
        }
        std::vector<Int> row(v.size());
        Int content = 0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            Rat scaled = v[i] * Rat(lcm);
            row[i] = numerator(scaled);
            content = boost::multiprecision::gcd(content, row[i]);
        }
        if (content > 1)
            for (auto& x : row) x /= content;
        out.push_back(std::move(row));
    }
    return out;
}

std::optional<std::vector<Int>> solve_integer(IntMat y, std::vector<Int> c) {
    const int rows = static_cast<int>(y.size());
    const int cols = rows ? static_cast<int>(y[0].size()) : 0;
    if (rows == 0) return std::vector<Int>(cols, Int(0));

    // Row operations act on c as well; column operations are mirrored on v,
    // so that y_final = U * y_initial * V with k = V z for D z = U c.
    IntMat v(cols, std::vector<Int>(cols, 0));
    for (int i = 0; i < cols; ++i) v[i][i] = 1;

    auto abs_of = [](const Int& x) { return x < 0 ? Int(-x) : x; };
    auto swap_cols = [&](int j1, int j2) {
        if (j1 == j2) return;
        for (int i = 0; i < rows; ++i) std::swap(y[i][j1], y[i][j2]);
        for (int i = 0; i < cols; ++i) std::swap(v[i][j1], v[i][j2]);
    };
    auto addmul_col = [&](int j, int t, const Int& q) {
        // column j -= q * column t
        for (int i = 0; i < rows; ++i) y[i][j] -= q * y[i][t];
        for (int i = 0; i < cols; ++i) v[i][j] -= q * v[i][t];
    };

    const int steps = std::min(rows, cols);
    for (int t = 0; t < steps; ++t) {
        // Repeatedly pull the smallest nonzero entry of the submatrix to
        // (t, t) and reduce its cross; |pivot| strictly decreases between
        // rounds, so the loop terminates with a clean pivot.
        while (true) {
            int pi = -1, pj = -1;
            for (int i = t; i < rows; ++i)
                for (int j = t; j < cols; ++j)
                    if (y[i][j] != 0 &&
                        (pi < 0 || abs_of(y[i][j]) < abs_of(y[pi][pj]))) {
                        pi = i;
                        pj = j;
                    }
            if (pi < 0) break;  // submatrix is zero
            if (pi != t) {
                std::swap(y[pi], y[t]);
                std::swap(c[pi], c[t]);
            }
            swap_cols(pj, t);

            bool clean = true;
            for (int i = t + 1; i < rows; ++i) {
                if (y[i][t] == 0) continue;
                const Int q = y[i][t] / y[t][t];
                if (q != 0) {
                    for (int j = t; j < cols; ++j) y[i][j] -= q * y[t][j];
                    c[i] -= q * c[t];
                }
                if (y[i][t] != 0) clean = false;
            }
            for (int j = t + 1; j < cols; ++j) {
                if (y[t][j] == 0) continue;
                const Int q = y[t][j] / y[t][t];
                if (q != 0) addmul_col(j, t, q);
                if (y[t][j] != 0) clean = false;
            }
            if (clean) break;
        }
        if (y[t][t] == 0) break;  // the rest of the matrix is zero
    }

    // Divisibility on the diagonal, zeros elsewhere, then k = V z.
    std::vector<Int> z(cols, 0);
    for (int i = 0; i < rows; ++i) {
        if (i < steps && y[i][i] != 0) {
            if (c[i] % y[i][i] != 0) return std::nullopt;
            z[i] = c[i] / y[i][i];
        } else if (c[i] != 0) {
            return std::nullopt;
        }
    }
    std::vector<Int> k(cols, 0);
    for (int i = 0; i < cols; ++i)
        for (int j = 0; j < cols; ++j)
            if (z[j] != 0) k[i] += v[i][j] * z[j];
    return k;
}

}
