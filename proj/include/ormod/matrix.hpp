#pragma once

#include <cstddef>
#include <vector>

#include "ormod/rat.hpp"

namespace ormod {

/// Square matrix with exact rational entries.
class QMatrix {
public:
    explicit QMatrix(std::size_t n) : n_(n), e_(n * n) {}

    static QMatrix identity(std::size_t n) {
        QMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rat(1);
        return m;
    }

    std::size_t n() const { return n_; }

    Rat& at(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

    QMatrix transpose() const;

    /// Exact determinant by fraction-free (Bareiss) elimination on the
    /// integer-scaled matrix.
    Rat det() const;

    bool is_invertible() const { return !det().is_zero(); }

    /// Exact inverse by Gauss-Jordan elimination; throws NotInvertible.
    QMatrix inverse() const;

    friend QMatrix operator*(const QMatrix& a, const QMatrix& b);

    friend bool operator==(const QMatrix& a, const QMatrix& b) { return a.n_ == b.n_ && a.e_ == b.e_; }
    friend bool operator!=(const QMatrix& a, const QMatrix& b) { return !(a == b); }
    friend bool operator<(const QMatrix& a, const QMatrix& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        for (std::size_t i = 0; i < a.e_.size(); ++i) {
            if (a.e_[i] != b.e_[i]) return a.e_[i] < b.e_[i];
        }
        return false;
    }

private:
    std::size_t n_;
    std::vector<Rat> e_;
};

}  // namespace ormod
