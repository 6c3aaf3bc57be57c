#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "hypertoric/errors.hpp"

namespace hypertoric {

using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

// Dense matrix with arbitrary-precision entries, row-major.
template <class T>
class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c) {}
    Mat(std::size_t r, std::size_t c, std::vector<T> entries)
        : rows_(r), cols_(c), a_(std::move(entries)) {
        if (a_.size() != rows_ * cols_) throw Error("matrix entry count mismatch");
    }
    // Rows given as an initializer-style nested vector.
    explicit Mat(const std::vector<std::vector<T>>& rows) {
        rows_ = rows.size();
        cols_ = rows.empty() ? 0 : rows[0].size();
        a_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw Error("ragged matrix rows");
            for (const auto& x : r) a_.push_back(x);
        }
    }

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    Mat transpose() const {
        Mat t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Mat operator*(const Mat& b) const {
        if (cols_ != b.rows_) throw Error("matrix product shape mismatch");
        Mat r(rows_, b.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& x = (*this)(i, k);
                if (x == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += x * b(k, j);
            }
        return r;
    }

    std::vector<T> operator*(const std::vector<T>& v) const {
        if (cols_ != v.size()) throw Error("matrix-vector shape mismatch");
        std::vector<T> r(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (x != 0) return false;
        return true;
    }

    void swap_rows(std::size_t i, std::size_t j) {
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
    }

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            s += i ? "; " : "";
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) s += ",";
                s += to_string_entry((*this)(i, j));
            }
        }
        return s + "]";
    }

  private:
    static std::string to_string_entry(const Int& x) { return x.get_str(); }
    static std::string to_string_entry(const Rat& x) { return x.get_str(); }

    std::size_t rows_, cols_;
    std::vector<T> a_;
};

using IntMatrix = Mat<Int>;
using RatMatrix = Mat<Rat>;

RatMatrix to_rational(const IntMatrix& m);

// Exact rank over Q (fraction-free Gaussian elimination).
std::size_t rank(const RatMatrix& m);
std::size_t rank(const IntMatrix& m);

// Determinant of a square matrix (Bareiss).
Int det(const IntMatrix& m);

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& m);

// Particular solution of A x = b over Q; throws NoSolution if inconsistent.
RatVec solve(const RatMatrix& a, const RatVec& b);

// Basis of the right kernel of A over Q (deterministic: free columns in order,
// free coordinate set to 1).
std::vector<RatVec> kernel_basis(const RatMatrix& a);

}  // namespace hypertoric
