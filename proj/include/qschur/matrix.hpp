#pragma once

// Sparse matrices over a RingSpec ring and exact rank computation.
// Generic ring: fraction-free elimination on Laurent entries with content
// stripping (rank over Q(t)). Field rings: ordinary Gaussian elimination.

#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qschur/rings.hpp"

namespace qschur {

class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::map<std::pair<std::size_t, std::size_t>, Scalar>& entries() const { return entries_; }

    void add(std::size_t r, std::size_t c, const Scalar& v) {
        if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index");
        if (v.is_zero()) return;
        auto key = std::make_pair(r, c);
        auto it = entries_.find(key);
        if (it == entries_.end()) {
            entries_.emplace(key, v);
        } else {
            it->second += v;
            if (it->second.is_zero()) entries_.erase(it);
        }
    }
    void set(std::size_t r, std::size_t c, const Scalar& v) {
        auto key = std::make_pair(r, c);
        entries_.erase(key);
        if (!v.is_zero()) {
            if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index");
            entries_.emplace(key, v);
        }
    }
    Scalar get(std::size_t r, std::size_t c, const RingSpec& ring) const {
        auto it = entries_.find({r, c});
        return it == entries_.end() ? ring.zero() : it->second;
    }
    bool is_zero() const { return entries_.empty(); }
    std::size_t nnz() const { return entries_.size(); }

    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

    // this * other
    SparseMatrix multiply(const SparseMatrix& other) const {
        if (cols_ != other.rows_) throw std::invalid_argument("matrix shape mismatch");
        SparseMatrix out(rows_, other.cols_);
        std::vector<std::vector<std::pair<std::size_t, const Scalar*>>> by_row(other.rows_);
        for (const auto& [rc, v] : other.entries_) by_row[rc.first].emplace_back(rc.second, &v);
        for (const auto& [rc, v] : entries_)
            for (const auto& [c2, v2] : by_row[rc.second]) out.add(rc.first, c2, v * (*v2));
        return out;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::map<std::pair<std::size_t, std::size_t>, Scalar> entries_;
};

namespace detail {

// Gaussian elimination over an exact field; T is Rational or FpElem handled
// through Scalar to keep one code path.
inline std::size_t field_rank(std::vector<std::vector<Scalar>> m, const RingSpec& ring) {
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m[0].size();
    auto invert = [&](const Scalar& s) -> Scalar {
        if (ring.kind() == RingKind::Rationals) return Scalar(Rational(1 / s.rational()));
        return Scalar(FpElem{mod_inverse(s.fp().value, s.fp().p), s.fp().p});
    };
    std::size_t rank = 0, row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && m[piv][col].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[row], m[piv]);
        const Scalar inv = invert(m[row][col]);
        for (std::size_t i = row + 1; i < rows; ++i) {
            if (m[i][col].is_zero()) continue;
            const Scalar f = m[i][col] * inv;
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
        }
        ++row;
        ++rank;
    }
    return rank;
}

inline void strip_row_content(std::vector<LaurentInt>& row) {
    BigInt g = 0;
    int min_e = 0;
    bool any = false;
    for (const auto& x : row) {
        if (x.is_zero()) continue;
        g = boost::multiprecision::gcd(g, x.content());
        min_e = any ? std::min(min_e, x.min_exp()) : x.min_exp();
        any = true;
    }
    if (!any || (g == 1 && min_e == 0)) return;
    for (auto& x : row) {
        if (x.is_zero()) continue;
        LaurentInt y;
        for (const auto& [e, c] : x.terms()) y += LaurentInt::term(c / g, e - min_e);
        x = y;
    }
}

// Fraction-free elimination for rank over Q(t). Rows are rescaled by their
// content after each update (rank is invariant under nonzero row scaling), so
// no division by previous pivots is needed.
inline std::size_t laurent_rank(std::vector<std::vector<LaurentInt>> m) {
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m[0].size();
    for (auto& r : m) strip_row_content(r);
    std::size_t rank = 0, row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        // pivot: smallest size measure, ties by lowest row index
        std::size_t piv = rows;
        BigInt best = 0;
        for (std::size_t i = row; i < rows; ++i) {
            if (m[i][col].is_zero()) continue;
            const BigInt sz = m[i][col].size_measure();
            if (piv == rows || sz < best) {
                piv = i;
                best = sz;
            }
        }
        if (piv == rows) continue;
        std::swap(m[row], m[piv]);
        const std::vector<LaurentInt>& pr = m[row];
        const LaurentInt& p = pr[col];
        for (std::size_t i = row + 1; i < rows; ++i) {
            if (m[i][col].is_zero()) continue;
            const LaurentInt f = m[i][col];
            for (std::size_t j = col; j < cols; ++j) {
                if (m[i][j].is_zero() && pr[j].is_zero()) continue;
                m[i][j] = p * m[i][j] - f * pr[j];
            }
            strip_row_content(m[i]);
        }
        ++row;
        ++rank;
    }
    return rank;
}

// Bareiss determinant of a square Laurent matrix; all divisions are exact
inline LaurentInt laurent_det(std::vector<std::vector<LaurentInt>> m) {
    const std::size_t n = m.size();
    if (n == 0) return LaurentInt(1);
    LaurentInt prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m[piv][k].is_zero()) ++piv;
        if (piv == n) return LaurentInt{};
        if (piv != k) {
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = divide_exact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
            m[i][k] = LaurentInt{};
        }
        prev = m[k][k];
    }
    LaurentInt det = m[n - 1][n - 1];
    if (sign < 0) det = -det;
    return det;
}

}  // namespace detail

// rank over the field of fractions of the ring of spec
inline std::size_t rank(const SparseMatrix& m, const RingSpec& spec) {
    if (m.rows() == 0 || m.cols() == 0 || m.is_zero()) return 0;
    if (spec.is_generic()) {
        std::vector<std::vector<LaurentInt>> d(m.rows(), std::vector<LaurentInt>(m.cols()));
        for (const auto& [rc, v] : m.entries()) d[rc.first][rc.second] = v.laurent();
        return detail::laurent_rank(std::move(d));
    }
    std::vector<std::vector<Scalar>> d(m.rows(), std::vector<Scalar>(m.cols(), spec.zero()));
    for (const auto& [rc, v] : m.entries()) d[rc.first][rc.second] = v;
    return detail::field_rank(std::move(d), spec);
}

// invertibility over the ring itself: unit determinant for the generic ring,
// full rank for the field rings
inline bool has_unit_determinant(const SparseMatrix& m, const RingSpec& spec) {
    if (m.rows() != m.cols()) return false;
    if (m.rows() == 0) return true;
    if (!spec.is_generic()) return rank(m, spec) == m.rows();
    std::vector<std::vector<LaurentInt>> d(m.rows(), std::vector<LaurentInt>(m.cols()));
    for (const auto& [rc, v] : m.entries()) d[rc.first][rc.second] = v.laurent();
    return detail::laurent_det(std::move(d)).is_unit();
}

}  // namespace qschur
