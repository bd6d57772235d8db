#pragma once

// Subspaces of a coordinate space, canonicalized eagerly to reduced
// row-echelon bases so that equality and containment are syntactic.

#include <optional>
#include <vector>

#include "zadkit/mat.hpp"

namespace zadkit {

// Incremental span builder. Rows are kept fully reduced at all times, so the
// accumulated basis is the RREF basis of everything inserted so far.
template <FieldType F>
class SpanAccumulator {
  public:
    using Elem = typename F::Elem;

    SpanAccumulator(F field, int ambient) : field_(field), ambient_(ambient) {}

    const F& field() const { return field_; }

    // Returns true when v enlarged the span.
    bool insert(Vec<F> v) {
        if (static_cast<int>(v.size()) != ambient_)
            fail(Errc::DimensionMismatch, "span insert ambient mismatch");
        reduce_against(v);
        int c = leading_col(v);
        if (c < 0) return false;
        const auto inv = field_.inv(v[c]);
        for (int j = c; j < ambient_; ++j) v[j] = field_.mul(v[j], inv);
        // clear the new pivot column from existing rows, keep rows sorted by pivot
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const auto f = rows_[i][c];
            if (field_.is_zero(f)) continue;
            for (int j = 0; j < ambient_; ++j)
                rows_[i][j] = field_.sub(rows_[i][j], field_.mul(f, v[j]));
        }
        std::size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < c) ++pos;
        rows_.insert(rows_.begin() + pos, std::move(v));
        pivots_.insert(pivots_.begin() + pos, c);
        return true;
    }

    int dim() const { return static_cast<int>(rows_.size()); }
    int ambient() const { return ambient_; }
    const std::vector<Vec<F>>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    bool contains(Vec<F> v) const {
        reduce_against(v);
        return leading_col(v) < 0;
    }

    // Coefficients of v in the stored basis rows; nullopt if v is outside.
    std::optional<Vec<F>> coordinates(const Vec<F>& v) const {
        Vec<F> w = v;
        Vec<F> coeff(rows_.size(), field_.zero());
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const auto f = w[pivots_[i]];
            if (field_.is_zero(f)) continue;
            coeff[i] = f;
            for (int j = 0; j < ambient_; ++j)
                w[j] = field_.sub(w[j], field_.mul(f, rows_[i][j]));
        }
        if (leading_col(w) >= 0) return std::nullopt;
        return coeff;
    }

  private:
    void reduce_against(Vec<F>& v) const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const auto f = v[pivots_[i]];
            if (field_.is_zero(f)) continue;
            for (int j = 0; j < ambient_; ++j)
                v[j] = field_.sub(v[j], field_.mul(f, rows_[i][j]));
        }
    }

    int leading_col(const Vec<F>& v) const {
        for (int j = 0; j < ambient_; ++j)
            if (!field_.is_zero(v[j])) return j;
        return -1;
    }

    F field_;
    int ambient_;
    std::vector<Vec<F>> rows_;   // reduced echelon rows
    std::vector<int> pivots_;    // strictly increasing
};

template <FieldType F>
class Subspace {
  public:
    using Elem = typename F::Elem;

    Subspace(F field, int ambient) : field_(field), ambient_(ambient) {}

    static Subspace zero(F field, int ambient) { return Subspace(field, ambient); }

    static Subspace full(F field, int ambient) {
        Subspace s(field, ambient);
        for (int i = 0; i < ambient; ++i) {
            Vec<F> e(ambient, field.zero());
            e[i] = field.one();
            s.rows_.push_back(std::move(e));
            s.pivots_.push_back(i);
        }
        return s;
    }

    static Subspace span(F field, int ambient, const std::vector<Vec<F>>& vectors) {
        SpanAccumulator<F> acc(field, ambient);
        for (const auto& v : vectors) acc.insert(v);
        return from_accumulator(acc);
    }

    static Subspace from_accumulator(const SpanAccumulator<F>& acc) {
        Subspace s(acc.field(), acc.ambient());
        s.rows_ = acc.rows();
        s.pivots_ = acc.pivots();
        return s;
    }

    const F& field() const { return field_; }
    int ambient() const { return ambient_; }
    int dim() const { return static_cast<int>(rows_.size()); }
    const std::vector<Vec<F>>& basis() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    bool contains(const Vec<F>& v) const {
        Vec<F> w = reduce(v);
        for (const auto& x : w)
            if (!field_.is_zero(x)) return false;
        return true;
    }

    std::optional<Vec<F>> coordinates(const Vec<F>& v) const {
        Vec<F> w = v;
        Vec<F> coeff(rows_.size(), field_.zero());
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const auto f = w[pivots_[i]];
            if (field_.is_zero(f)) continue;
            coeff[i] = f;
            for (int j = 0; j < ambient_; ++j)
                w[j] = field_.sub(w[j], field_.mul(f, rows_[i][j]));
        }
        for (const auto& x : w)
            if (!field_.is_zero(x)) return std::nullopt;
        return coeff;
    }

    bool contains_all(const Subspace& o) const {
        for (const auto& r : o.rows_)
            if (!contains(r)) return false;
        return true;
    }

    bool operator==(const Subspace& o) const {
        if (ambient_ != o.ambient_ || rows_.size() != o.rows_.size()) return false;
        for (std::size_t i = 0; i < rows_.size(); ++i)
            for (int j = 0; j < ambient_; ++j)
                if (!field_.eq(rows_[i][j], o.rows_[i][j])) return false;
        return true;
    }

    Subspace sum(const Subspace& o) const {
        require_same_field(field_, o.field_);
        if (ambient_ != o.ambient_) fail(Errc::DimensionMismatch, "subspace sum ambient mismatch");
        auto acc = to_accumulator();
        for (const auto& r : o.rows_) acc.insert(r);
        return from_accumulator(acc);
    }

    // Columns without a pivot, i.e. the canonical complement coordinates.
    std::vector<int> nonpivot_cols() const {
        std::vector<bool> is_pivot(ambient_, false);
        for (int c : pivots_) is_pivot[c] = true;
        std::vector<int> out;
        for (int c = 0; c < ambient_; ++c)
            if (!is_pivot[c]) out.push_back(c);
        return out;
    }

    // Reduce v modulo this subspace (eliminate pivot coordinates).
    Vec<F> reduce(Vec<F> v) const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const auto f = v[pivots_[i]];
            if (field_.is_zero(f)) continue;
            for (int j = 0; j < ambient_; ++j)
                v[j] = field_.sub(v[j], field_.mul(f, rows_[i][j]));
        }
        return v;
    }

    SpanAccumulator<F> to_accumulator() const {
        SpanAccumulator<F> acc(field_, ambient_);
        for (const auto& r : rows_) acc.insert(r);
        return acc;
    }

  private:
    F field_;
    int ambient_;
    std::vector<Vec<F>> rows_;
    std::vector<int> pivots_;
};

} // namespace zadkit
