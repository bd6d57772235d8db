#pragma once

// Dense exact matrices with reduced row-echelon form, rank, null spaces and
// linear solving. Everything is value-semantic and immutable once built;
// operations return fresh matrices.

#include <optional>
#include <utility>
#include <vector>

#include "zadkit/field.hpp"

namespace zadkit {

template <FieldType F>
class Mat {
  public:
    using Elem = typename F::Elem;

    Mat() : field_(), rows_(0), cols_(0) {}

    Mat(F field, int rows, int cols)
        : field_(field), rows_(rows), cols_(cols),
          a_(static_cast<std::size_t>(rows) * cols, field.zero()) {
        if (rows < 0 || cols < 0) fail(Errc::InvalidArgument, "negative matrix dimension");
    }

    static Mat identity(F field, int n) {
        Mat m(field, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = field.one();
        return m;
    }

    static Mat from_rows(F field, const std::vector<Vec<F>>& rows, int cols) {
        Mat m(field, static_cast<int>(rows.size()), cols);
        for (int i = 0; i < m.rows(); ++i) {
            if (static_cast<int>(rows[i].size()) != cols)
                fail(Errc::DimensionMismatch, "ragged row list");
            for (int j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    const F& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Elem& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Elem& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

    Vec<F> row(int r) const {
        Vec<F> v(cols_);
        for (int j = 0; j < cols_; ++j) v[j] = at(r, j);
        return v;
    }

    Vec<F> col(int c) const {
        Vec<F> v(rows_);
        for (int i = 0; i < rows_; ++i) v[i] = at(i, c);
        return v;
    }

    void set_row(int r, const Vec<F>& v) {
        for (int j = 0; j < cols_; ++j) at(r, j) = v[j];
    }

    void set_col(int c, const Vec<F>& v) {
        for (int i = 0; i < rows_; ++i) at(i, c) = v[i];
    }

    bool operator==(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) return false;
        for (std::size_t k = 0; k < a_.size(); ++k)
            if (!field_.eq(a_[k], o.a_[k])) return false;
        return true;
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!field_.is_zero(x)) return false;
        return true;
    }

    Mat mul(const Mat& o) const {
        require_same_field(field_, o.field_);
        if (cols_ != o.rows_) fail(Errc::DimensionMismatch, "matrix product shape mismatch");
        Mat r(field_, rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Elem& aik = at(i, k);
                if (field_.is_zero(aik)) continue;
                for (int j = 0; j < o.cols_; ++j)
                    r.at(i, j) = field_.add(r.at(i, j), field_.mul(aik, o.at(k, j)));
            }
        return r;
    }

    Vec<F> apply(const Vec<F>& v) const {
        if (static_cast<int>(v.size()) != cols_) fail(Errc::DimensionMismatch, "matrix-vector shape mismatch");
        Vec<F> r(rows_, field_.zero());
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (!field_.is_zero(at(i, j))) r[i] = field_.add(r[i], field_.mul(at(i, j), v[j]));
        return r;
    }

    Mat add(const Mat& o) const {
        require_same_field(field_, o.field_);
        if (rows_ != o.rows_ || cols_ != o.cols_) fail(Errc::DimensionMismatch, "matrix sum shape mismatch");
        Mat r = *this;
        for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = field_.add(r.a_[k], o.a_[k]);
        return r;
    }

    Mat sub(const Mat& o) const {
        require_same_field(field_, o.field_);
        if (rows_ != o.rows_ || cols_ != o.cols_) fail(Errc::DimensionMismatch, "matrix difference shape mismatch");
        Mat r = *this;
        for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = field_.sub(r.a_[k], o.a_[k]);
        return r;
    }

    Mat scaled(const Elem& s) const {
        Mat r = *this;
        for (auto& x : r.a_) x = field_.mul(x, s);
        return r;
    }

    // Row-major flattening of the entries.
    Vec<F> vectorized() const { return a_; }

  private:
    F field_;
    int rows_, cols_;
    std::vector<Elem> a_;
};

// Result of Gaussian elimination: the reduced form together with pivot data.
template <FieldType F>
struct Echelon {
    Mat<F> reduced;
    std::vector<int> pivot_cols; // strictly increasing, one per nonzero row
    int rank = 0;
};

template <FieldType F>
Echelon<F> echelonize(Mat<F> m) {
    const F& k = m.field();
    const int rows = m.rows(), cols = m.cols();
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (!k.is_zero(m.at(i, c))) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
        const auto inv = k.inv(m.at(r, c));
        for (int j = c; j < cols; ++j) m.at(r, j) = k.mul(m.at(r, j), inv);
        for (int i = 0; i < rows; ++i) {
            if (i == r || k.is_zero(m.at(i, c))) continue;
            const auto f = m.at(i, c);
            for (int j = c; j < cols; ++j)
                m.at(i, j) = k.sub(m.at(i, j), k.mul(f, m.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return Echelon<F>{std::move(m), std::move(pivots), r};
}

template <FieldType F>
Mat<F> rref(const Mat<F>& m) {
    return echelonize(m).reduced;
}

template <FieldType F>
int rank(const Mat<F>& m) {
    return echelonize(m).rank;
}

// Basis vectors of {v : m v = 0}, one per free column, in column order.
template <FieldType F>
std::vector<Vec<F>> nullspace_basis(const Mat<F>& m) {
    const F& k = m.field();
    auto ech = echelonize(m);
    const int cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (int c : ech.pivot_cols) is_pivot[c] = true;
    std::vector<Vec<F>> basis;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        Vec<F> v(cols, k.zero());
        v[c] = k.one();
        for (int r = 0; r < ech.rank; ++r) {
            // pivot row r has its pivot at ech.pivot_cols[r]
            v[ech.pivot_cols[r]] = k.neg(ech.reduced.at(r, c));
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// One solution of m x = b, free variables set to zero; nullopt if inconsistent.
template <FieldType F>
std::optional<Vec<F>> solve(const Mat<F>& m, const Vec<F>& b) {
    const F& k = m.field();
    if (static_cast<int>(b.size()) != m.rows()) fail(Errc::DimensionMismatch, "solve shape mismatch");
    Mat<F> aug(k, m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    auto ech = echelonize(aug);
    Vec<F> x(m.cols(), k.zero());
    for (int r = 0; r < ech.rank; ++r) {
        int c = ech.pivot_cols[r];
        if (c == m.cols()) return std::nullopt; // pivot in augmented column
        x[c] = ech.reduced.at(r, m.cols());
    }
    return x;
}

template <FieldType F>
bool is_invertible(const Mat<F>& m) {
    return m.rows() == m.cols() && rank(m) == m.rows();
}

} // namespace zadkit
