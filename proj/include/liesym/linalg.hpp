#pragma once

#include "liesym/expression.hpp"
#include "liesym/rational.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace liesym {

/// Field operations needed by the elimination routines below.
template <class F>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
    static bool is_zero(const Rational& a) { return sgn(a) == 0; }
    static Rational zero() { return 0; }
    static Rational one() { return 1; }
    static std::size_t weight(const Rational&) { return 0; }
};

/// Coefficient field Q(R, S, V, W)[omega]: canonical zero is exact there.
template <>
struct FieldTraits<Expression> {
    static bool is_zero(const Expression& a) { return a.is_zero(); }
    static Expression zero() { return Expression(0); }
    static Expression one() { return Expression(1); }
    /// Tree size; pivots are chosen small to limit expression swell.
    static std::size_t weight(const Expression& a) {
        std::size_t w = 1;
        for (auto& op : a.operands()) w += weight(op);
        return w;
    }
};

template <class F>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, FieldTraits<F>::zero()) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    F& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const F& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<F> row(std::size_t i) const { return {data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_}; }
    void append_row(const std::vector<F>& r) {
        if (rows_ == 0 && cols_ == 0) cols_ = r.size();
        if (r.size() != cols_) throw std::invalid_argument("row length mismatch");
        data_.insert(data_.end(), r.begin(), r.end());
        ++rows_;
    }
    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
    }

    static Matrix from_rows(const std::vector<std::vector<F>>& rows, std::size_t cols) {
        Matrix m(0, cols);
        for (auto& r : rows) m.append_row(r);
        return m;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<F> data_;
};

/// In-place reduced row echelon form; returns the pivot columns.
template <class F>
std::vector<std::size_t> rref(Matrix<F>& m) {
    using T = FieldTraits<F>;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = m.rows();
        for (std::size_t i = r; i < m.rows(); ++i) {
            if (T::is_zero(m.at(i, c))) continue;
            if (p == m.rows() || T::weight(m.at(i, c)) < T::weight(m.at(p, c))) p = i;
            if (T::weight(m.at(p, c)) <= 1) break;
        }
        if (p == m.rows()) continue;
        m.swap_rows(p, r);
        F inv = T::one() / m.at(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) = m.at(r, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || T::is_zero(m.at(i, c))) continue;
            F factor = m.at(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!T::is_zero(m.at(r, j))) m.at(i, j) = m.at(i, j) - factor * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class F>
std::size_t rank(Matrix<F> m) {
    return rref(m).size();
}

/// Basis of {v : m v = 0}, one vector per free column, free entry set to one.
template <class F>
std::vector<std::vector<F>> nullspace(Matrix<F> m) {
    using T = FieldTraits<F>;
    auto pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<F>> out;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<F> v(m.cols(), T::zero());
        v[free] = T::one();
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = T::zero() - m.at(k, free);
        out.push_back(std::move(v));
    }
    return out;
}

/// Some x with a x = b, or nullopt when inconsistent.
template <class F>
std::optional<std::vector<F>> solve(const Matrix<F>& a, const std::vector<F>& b) {
    using T = FieldTraits<F>;
    if (b.size() != a.rows()) throw std::invalid_argument("solve: size mismatch");
    Matrix<F> aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    std::vector<F> x(a.cols(), T::zero());
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug.at(k, a.cols());
    return x;
}

} // namespace liesym
