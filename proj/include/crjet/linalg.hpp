#ifndef CRJET_LINALG_HPP
#define CRJET_LINALG_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "crjet/scalar.hpp"

namespace crjet {

// Dense linear algebra generic over the scalar field. F needs + - * /,
// is_zero(), and a caller-supplied one (Fp carries its modulus in values).
template <class F>
using Matrix = std::vector<std::vector<F>>;

namespace detail {
template <class F>
int find_pivot(const Matrix<F>& m, std::size_t col, std::size_t from) {
    for (std::size_t r = from; r < m.size(); ++r)
        if (!m[r][col].is_zero()) return int(r);
    return -1;
}
} // namespace detail

// Reduced row echelon form in place; returns pivot columns.
template <class F>
std::vector<std::size_t> rref(Matrix<F>& m) {
    std::vector<std::size_t> piv;
    if (m.empty()) return piv;
    std::size_t cols = m[0].size(), row = 0;
    for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
        int p = detail::find_pivot(m, c, row);
        if (p < 0) continue;
        std::swap(m[row], m[std::size_t(p)]);
        F inv_lead = m[row][c];
        for (std::size_t k = c; k < cols; ++k) m[row][k] = m[row][k] / inv_lead;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][c].is_zero()) continue;
            F f = m[r][c];
            for (std::size_t k = c; k < cols; ++k)
                if (!m[row][k].is_zero()) m[r][k] = m[r][k] - f * m[row][k];
        }
        piv.push_back(c);
        ++row;
    }
    return piv;
}

template <class F>
std::size_t rank(Matrix<F> m) {
    if (m.empty()) return 0;
    std::size_t cols = m[0].size(), row = 0;
    for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
        int p = detail::find_pivot(m, c, row);
        if (p < 0) continue;
        std::swap(m[row], m[std::size_t(p)]);
        for (std::size_t r = row + 1; r < m.size(); ++r) {
            if (m[r][c].is_zero()) continue;
            F f = m[r][c] / m[row][c];
            for (std::size_t k = c; k < cols; ++k)
                if (!m[row][k].is_zero()) m[r][k] = m[r][k] - f * m[row][k];
        }
        ++row;
    }
    return row;
}

// Fraction-free Bareiss elimination; divisions are exact.
template <class F>
F determinant(Matrix<F> m, const F& one) {
    std::size_t n = m.size();
    if (n == 0) return one;
    F prev = one;
    bool neg = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            int p = detail::find_pivot(m, k, k + 1);
            if (p < 0) return one - one;
            std::swap(m[k], m[std::size_t(p)]);
            neg = !neg;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        }
        prev = m[k][k];
    }
    F d = m[n - 1][n - 1];
    return neg ? -d : d;
}

// Laplace expansion along the first row; the oracle for small sizes.
template <class F>
F cofactor_determinant(const Matrix<F>& m, const F& one) {
    std::size_t n = m.size();
    if (n == 0) return one;
    if (n == 1) return m[0][0];
    F acc = one - one;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        Matrix<F> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<F> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        F t = m[0][j] * cofactor_determinant(minor, one);
        acc = (j % 2) ? acc - t : acc + t;
    }
    return acc;
}

// Basis of {x : m x = 0}.
template <class F>
std::vector<std::vector<F>> nullspace(Matrix<F> m, std::size_t cols, const F& one) {
    auto piv = rref(m);
    std::vector<bool> is_piv(cols, false);
    for (auto c : piv) is_piv[c] = true;
    std::vector<std::vector<F>> basis;
    F zero = one - one;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        std::vector<F> v(cols, zero);
        v[f] = one;
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

// One solution of m x = rhs, if consistent.
template <class F>
std::optional<std::vector<F>> solve(const Matrix<F>& m, const std::vector<F>& rhs, const F& one) {
    std::size_t cols = m.empty() ? 0 : m[0].size();
    Matrix<F> a = m;
    for (std::size_t r = 0; r < a.size(); ++r) a[r].push_back(rhs[r]);
    auto piv = rref(a);
    F zero = one - one;
    if (!piv.empty() && piv.back() == cols) return std::nullopt;
    std::vector<F> x(cols, zero);
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = a[r][cols];
    return x;
}

// Incremental sparse elimination over Q for large homogeneous systems.
class SparseSystem {
public:
    using Row = std::vector<std::pair<std::size_t, Rational>>;

    explicit SparseSystem(std::size_t cols) : cols_(cols) {}
    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return rows_.size(); }
    std::size_t constraints() const { return seen_; }
    // Returns true when the row was independent of the previous ones.
    bool add_row(Row row);
    std::vector<std::vector<Rational>> nullspace() const;

private:
    std::size_t cols_;
    std::size_t seen_ = 0;
    std::map<std::size_t, std::map<std::size_t, Rational>> rows_; // pivot column -> row (pivot entry 1)
};

} // namespace crjet

#endif
