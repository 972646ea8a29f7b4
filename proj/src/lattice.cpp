#include "cgr/lattice.hpp"

namespace cgr {

Int IntMat::det() const {
    if (rows_ != cols_) throw Error("det: matrix not square");
    int n = rows_;
    if (n == 0) return 1;
    IntMat m = *this;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) { piv = i; break; }
            if (piv < 0) return 0;
            m.swap_rows(k, piv);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = num / prev;  // Bareiss: division is exact
            }
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    Int d = m.at(n - 1, n - 1);
    return sign < 0 ? Int(-d) : d;
}

IntMat hnf(IntMat m) {
    const int rows = m.rows(), cols = m.cols();
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (m.at(i, c) != 0) { piv = i; break; }
        if (piv < 0) continue;
        m.swap_rows(r, piv);
        // Clear the column below the pivot with unimodular 2-row combinations.
        for (int i = r + 1; i < rows; ++i) {
            if (m.at(i, c) == 0) continue;
            Xgcd e = xgcd(m.at(r, c), m.at(i, c));
            Int a = m.at(r, c) / e.g;
            Int b = m.at(i, c) / e.g;
            for (int j = c; j < cols; ++j) {
                Int top = e.s * m.at(r, j) + e.t * m.at(i, j);
                Int bot = -b * m.at(r, j) + a * m.at(i, j);
                m.at(r, j) = top;
                m.at(i, j) = bot;
            }
        }
        if (m.at(r, c) < 0)
            for (int j = c; j < cols; ++j) m.at(r, j) = -m.at(r, j);
        for (int i = 0; i < r; ++i) {
            Int q = floor_div(m.at(i, c), m.at(r, c));
            if (q == 0) continue;
            for (int j = c; j < cols; ++j) m.at(i, j) -= q * m.at(r, j);
        }
        ++r;
    }
    IntMat out(r, cols);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < cols; ++j) out.at(i, j) = m.at(i, j);
    return out;
}

IntMat kernel_basis(const IntMat& m) {
    // Row-reduce [M^T | I]; rows whose M^T-block vanished carry kernel
    // vectors of M in the identity block.
    const int n = m.cols(), rows = m.rows();
    IntMat aug(n, rows + n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < rows; ++j) aug.at(i, j) = m.at(j, i);
        aug.at(i, rows + i) = 1;
    }
    IntMat h = hnf(std::move(aug));
    std::vector<int> ker_rows;
    for (int i = 0; i < h.rows(); ++i) {
        bool zero = true;
        for (int j = 0; j < rows && zero; ++j) zero = (h.at(i, j) == 0);
        if (zero) ker_rows.push_back(i);
    }
    IntMat k(static_cast<int>(ker_rows.size()), n);
    for (size_t i = 0; i < ker_rows.size(); ++i)
        for (int j = 0; j < n; ++j) k.at(static_cast<int>(i), j) = h.at(ker_rows[i], rows + j);
    return hnf(std::move(k));
}

bool Lattice::contains(const Vec& v) const {
    if (static_cast<int>(v.size()) != ambient_) throw Error("Lattice: ambient mismatch");
    Vec w = v;
    int row = 0;
    for (int c = 0; c < ambient_ && row < basis_.rows(); ++c) {
        if (basis_.at(row, c) == 0) continue;  // not a pivot column of this row
        if (w[c] != 0) {
            if (w[c] % basis_.at(row, c) != 0) return false;
            Int q = w[c] / basis_.at(row, c);
            for (int j = c; j < ambient_; ++j) w[j] -= q * basis_.at(row, j);
        }
        ++row;
    }
    return cgr::is_zero(w);
}

bool Lattice::contains(const Lattice& other) const {
    for (int i = 0; i < other.basis_.rows(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

Lattice Lattice::intersect(const Lattice& other) const {
    if (ambient_ != other.ambient_) throw Error("Lattice: ambient mismatch");
    const int a = basis_.rows(), b = other.basis_.rows();
    if (a == 0 || b == 0) return Lattice::zero(ambient_);
    // u*A = v*B  <=>  A^T u - B^T v = 0; image of the u-part under A is the
    // intersection.
    IntMat sys(ambient_, a + b);
    for (int i = 0; i < ambient_; ++i) {
        for (int j = 0; j < a; ++j) sys.at(i, j) = basis_.at(j, i);
        for (int j = 0; j < b; ++j) sys.at(i, a + j) = -other.basis_.at(j, i);
    }
    IntMat ker = kernel_basis(sys);
    IntMat rows(ker.rows(), ambient_);
    for (int i = 0; i < ker.rows(); ++i)
        for (int c = 0; c < ambient_; ++c) {
            Int s = 0;
            for (int j = 0; j < a; ++j) s += ker.at(i, j) * basis_.at(j, c);
            rows.at(i, c) = s;
        }
    return Lattice(ambient_, std::move(rows));
}

Lattice Lattice::sum(const Lattice& other) const {
    if (ambient_ != other.ambient_) throw Error("Lattice: ambient mismatch");
    IntMat rows(basis_.rows() + other.basis_.rows(), ambient_);
    for (int i = 0; i < basis_.rows(); ++i)
        for (int j = 0; j < ambient_; ++j) rows.at(i, j) = basis_.at(i, j);
    for (int i = 0; i < other.basis_.rows(); ++i)
        for (int j = 0; j < ambient_; ++j) rows.at(basis_.rows() + i, j) = other.basis_.at(i, j);
    return Lattice(ambient_, std::move(rows));
}

}  // namespace cgr
