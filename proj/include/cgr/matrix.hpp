#pragma once

#include "cgr/int_types.hpp"

#include <cstddef>
#include <initializer_list>

namespace cgr {

/// Dense matrix of arbitrary-precision integers, row major.
class IntMat {
public:
    IntMat() : rows_(0), cols_(0) {}
    IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Int(0)) {}
    IntMat(std::initializer_list<std::initializer_list<int>> rows) {
        rows_ = static_cast<int>(rows.size());
        cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
        a_.reserve(static_cast<size_t>(rows_) * cols_);
        for (const auto& r : rows) {
            if (static_cast<int>(r.size()) != cols_) throw Error("IntMat: ragged initializer");
            for (int v : r) a_.emplace_back(v);
        }
    }

    static IntMat identity(int n) {
        IntMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    Vec row(int i) const {
        Vec r(cols_);
        for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
        return r;
    }
    void set_row(int i, const Vec& v) {
        for (int j = 0; j < cols_; ++j) at(i, j) = v[j];
    }
    void swap_rows(int i, int k) {
        for (int j = 0; j < cols_; ++j) std::swap(at(i, j), at(k, j));
    }

    IntMat transposed() const {
        IntMat t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    Vec mul_vec(const Vec& v) const {
        if (static_cast<int>(v.size()) != cols_) throw Error("IntMat: dimension mismatch");
        Vec r(rows_, Int(0));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (at(i, j) != 0 && v[j] != 0) r[i] += at(i, j) * v[j];
        return r;
    }

    friend IntMat operator*(const IntMat& a, const IntMat& b) {
        if (a.cols_ != b.rows_) throw Error("IntMat: dimension mismatch");
        IntMat c(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const Int& aik = a.at(i, k);
                if (aik == 0) continue;
                for (int j = 0; j < b.cols_; ++j)
                    if (b.at(k, j) != 0) c.at(i, j) += aik * b.at(k, j);
            }
        return c;
    }

    friend IntMat operator-(const IntMat& a, const IntMat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("IntMat: dimension mismatch");
        IntMat c(a.rows_, a.cols_);
        for (size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = a.a_[i] - b.a_[i];
        return c;
    }

    friend IntMat operator*(const Int& s, const IntMat& a) {
        IntMat c(a.rows_, a.cols_);
        for (size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = s * a.a_[i];
        return c;
    }

    bool operator==(const IntMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const IntMat& o) const { return !(*this == o); }

    /// Determinant by fraction-free (Bareiss) elimination. Square only.
    Int det() const;

private:
    int rows_, cols_;
    std::vector<Int> a_;
};

}  // namespace cgr
