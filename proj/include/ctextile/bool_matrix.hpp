#ifndef CTEXTILE_BOOL_MATRIX_HPP
#define CTEXTILE_BOOL_MATRIX_HPP

#include <cstdint>
#include <vector>

#include "ctextile/error.hpp"

namespace ctextile {

// Square 0-1 matrix with the idempotent (boolean) product. Entries of the
// product are OR over ANDs, so repeated multiplication never overflows and
// a zero factor annihilates the whole product.
class BoolMatrix {
public:
    BoolMatrix() : n_(0) {}
    explicit BoolMatrix(int n) : n_(n), bits_(static_cast<size_t>(n) * n, 0) {
        if (n < 0) fail(errc::invalid_argument, "negative matrix size");
    }

    static BoolMatrix identity(int n) {
        BoolMatrix m(n);
        for (int i = 0; i < n; ++i) m.set(i, i, true);
        return m;
    }

    int size() const { return n_; }

    bool get(int i, int j) const { return bits_[static_cast<size_t>(i) * n_ + j] != 0; }
    void set(int i, int j, bool v) { bits_[static_cast<size_t>(i) * n_ + j] = v ? 1 : 0; }

    bool is_zero() const {
        for (uint8_t b : bits_)
            if (b) return false;
        return true;
    }

    // Boolean product: (this * rhs)(i,k) = OR_j this(i,j) AND rhs(j,k).
    BoolMatrix operator*(const BoolMatrix& rhs) const {
        if (n_ != rhs.n_) fail(errc::size_mismatch, "boolean product of unequal sizes");
        BoolMatrix out(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                if (!get(i, j)) continue;
                for (int k = 0; k < n_; ++k)
                    if (rhs.get(j, k)) out.set(i, k, true);
            }
        return out;
    }

    BoolMatrix operator|(const BoolMatrix& rhs) const {
        if (n_ != rhs.n_) fail(errc::size_mismatch, "boolean OR of unequal sizes");
        BoolMatrix out(n_);
        for (size_t t = 0; t < bits_.size(); ++t) out.bits_[t] = bits_[t] | rhs.bits_[t];
        return out;
    }

    // Kronecker product; index (i1,i2) maps to i1*rhs.size() + i2.
    BoolMatrix kron(const BoolMatrix& rhs) const {
        const int m = rhs.n_;
        BoolMatrix out(n_ * m);
        for (int i1 = 0; i1 < n_; ++i1)
            for (int j1 = 0; j1 < n_; ++j1) {
                if (!get(i1, j1)) continue;
                for (int i2 = 0; i2 < m; ++i2)
                    for (int j2 = 0; j2 < m; ++j2)
                        if (rhs.get(i2, j2)) out.set(i1 * m + i2, j1 * m + j2, true);
            }
        return out;
    }

    bool operator==(const BoolMatrix& rhs) const { return n_ == rhs.n_ && bits_ == rhs.bits_; }
    bool operator!=(const BoolMatrix& rhs) const { return !(*this == rhs); }
    bool operator<(const BoolMatrix& rhs) const {
        if (n_ != rhs.n_) return n_ < rhs.n_;
        return bits_ < rhs.bits_;
    }

private:
    int n_;
    std::vector<uint8_t> bits_;
};

} // namespace ctextile

#endif
