#pragma once

#include "torlie/rational.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace torlie {

/// Dense matrix over Q.
class RatMatrix {
  public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static RatMatrix identity(std::size_t n) {
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    RatMatrix& operator+=(const RatMatrix& o) {
        check_same_shape(o);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }
    RatMatrix& operator-=(const RatMatrix& o) {
        check_same_shape(o);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
        return *this;
    }
    RatMatrix& operator*=(const Rational& s) {
        for (auto& x : a_) x *= s;
        return *this;
    }

    friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
    friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
    friend RatMatrix operator*(const Rational& s, RatMatrix m) { return m *= s; }

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("RatMatrix: shape mismatch in product");
        RatMatrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Rational& aik = a.at(i, k);
                if (aik.is_zero()) continue;  // generator matrices are sparse
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const Rational& bkj = b.at(k, j);
                    if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
                }
            }
        return r;
    }

    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    std::vector<Rational> apply(const std::vector<Rational>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("RatMatrix: vector length mismatch");
        std::vector<Rational> r(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) {
                const Rational& aij = at(i, j);
                if (!aij.is_zero() && !v[j].is_zero()) r[i] += aij * v[j];
            }
        return r;
    }

    RatMatrix commutator(const RatMatrix& o) const { return *this * o - o * *this; }

  private:
    void check_same_shape(const RatMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("RatMatrix: shape mismatch");
    }

    std::size_t rows_, cols_;
    std::vector<Rational> a_;
};

/// Sparse vector over an ordered key space.
template <class K>
using SparseVec = std::map<K, Rational>;

template <class K>
void sparse_axpy(SparseVec<K>& dst, const Rational& scale, const SparseVec<K>& src) {
    if (scale.is_zero()) return;
    for (const auto& [k, c] : src) {
        auto [it, inserted] = dst.emplace(k, scale * c);
        if (!inserted) {
            it->second += scale * c;
            if (it->second.is_zero()) dst.erase(it);
        }
    }
}

/// Incrementally maintained reduced row-echelon basis of sparse vectors.
/// Each stored row is normalized so its least key (the pivot) has
/// coefficient 1, and that key occurs in no other row. Exact arithmetic
/// throughout; insertion order does not affect the resulting span.
template <class K>
class RowSpan {
  public:
    std::size_t dim() const { return rows_.size(); }
    const std::vector<SparseVec<K>>& rows() const { return rows_; }

    /// Reduces v against the basis; if a nonzero remainder survives it
    /// becomes a new basis row. Returns true when the dimension grew.
    bool insert(SparseVec<K> v) {
        reduce(v);
        if (v.empty()) return false;
        K pivot = v.begin()->first;
        Rational lead = v.begin()->second;
        for (auto& [k, c] : v) c /= lead;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            auto it = rows_[i].find(pivot);
            if (it != rows_[i].end()) {
                Rational factor = -it->second;
                sparse_axpy(rows_[i], factor, v);
            }
        }
        pivots_[pivot] = rows_.size();
        rows_.push_back(std::move(v));
        return true;
    }

    bool contains(SparseVec<K> v) const {
        reduce(v);
        return v.empty();
    }

    /// Coordinates of v in the stored rows, or nullopt if v is outside the
    /// span.
    std::optional<std::vector<Rational>> coordinates(SparseVec<K> v) const {
        std::vector<Rational> coeffs(rows_.size());
        while (!v.empty()) {
            auto it = pivots_.find(v.begin()->first);
            if (it == pivots_.end()) return std::nullopt;
            Rational c = v.begin()->second;
            coeffs[it->second] = c;
            sparse_axpy(v, -c, rows_[it->second]);
        }
        return coeffs;
    }

  private:
    void reduce(SparseVec<K>& v) const {
        while (!v.empty()) {
            auto it = pivots_.find(v.begin()->first);
            if (it == pivots_.end()) return;
            sparse_axpy(v, -v.begin()->second, rows_[it->second]);
        }
    }

    std::vector<SparseVec<K>> rows_;
    std::map<K, std::size_t> pivots_;
};

}  // namespace torlie
