#include "ormod/matrix.hpp"

#include <utility>

namespace ormod {

QMatrix QMatrix::transpose() const {
    QMatrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) t.at(j, i) = at(i, j);
    return t;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.n_ != b.n_) fail(Errc::DimensionMismatch, "matrix product size mismatch");
    QMatrix r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) {
        for (std::size_t k = 0; k < a.n_; ++k) {
            const Rat& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < a.n_; ++j) {
                if (b.at(k, j).is_zero()) continue;
                r.at(i, j) += aik * b.at(k, j);
            }
        }
    }
    return r;
}

Rat QMatrix::det() const {
    if (n_ == 0) return Rat(1);
    // Scale each row to integers, run Bareiss, divide the scales back out.
    std::vector<std::vector<BigInt>> m(n_, std::vector<BigInt>(n_));
    Rat scale(1);
    for (std::size_t i = 0; i < n_; ++i) {
        BigInt l(1);
        for (std::size_t j = 0; j < n_; ++j)
            l = boost::multiprecision::lcm(l, at(i, j).den());
        for (std::size_t j = 0; j < n_; ++j)
            m[i][j] = at(i, j).num() * (l / at(i, j).den());
        scale *= Rat(l);
    }
    BigInt prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n_; ++k) {
        if (m[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n_ && m[r][k] == 0) ++r;
            if (r == n_) return Rat(0);
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n_; ++i) {
            for (std::size_t j = k + 1; j < n_; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    Rat d(m[n_ - 1][n_ - 1]);
    if (sign < 0) d = -d;
    return d / scale;
}

QMatrix QMatrix::inverse() const {
    std::vector<std::vector<Rat>> a(n_, std::vector<Rat>(2 * n_));
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) a[i][j] = at(i, j);
        a[i][n_ + i] = Rat(1);
    }
    for (std::size_t col = 0; col < n_; ++col) {
        std::size_t piv = col;
        while (piv < n_ && a[piv][col].is_zero()) ++piv;
        if (piv == n_) fail(Errc::NotInvertible, "singular matrix");
        std::swap(a[col], a[piv]);
        Rat inv = a[col][col].inverse();
        for (std::size_t j = col; j < 2 * n_; ++j) a[col][j] *= inv;
        for (std::size_t i = 0; i < n_; ++i) {
            if (i == col || a[i][col].is_zero()) continue;
            Rat f = a[i][col];
            for (std::size_t j = col; j < 2 * n_; ++j) a[i][j] -= f * a[col][j];
        }
    }
    QMatrix r(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) r.at(i, j) = a[i][n_ + j];
    return r;
}

}  // namespace ormod
