#include "ghostalg/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace ghost {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : r_(rows), c_(cols), a_(std::move(entries)) {
    if (a_.size() != r_ * c_) throw std::invalid_argument("matrix entry count mismatch");
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (c_ != o.r_) throw std::invalid_argument("matrix shape mismatch");
    Matrix m(r_, o.c_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t k = 0; k < c_; ++k) {
            const Rational& x = (*this)(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < o.c_; ++j) m(i, j) += x * o(k, j);
        }
    return m;
}

Matrix Matrix::operator*(const Rational& s) const {
    Matrix m = *this;
    for (auto& x : m.a_) x *= s;
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix shape mismatch");
    Matrix m = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] += o.a_[i];
    return m;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + o * Rational(-1); }

Matrix Matrix::transpose() const {
    Matrix m(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

Rational Matrix::trace() const {
    Rational t = 0;
    for (std::size_t i = 0; i < std::min(r_, c_); ++i) t += (*this)(i, i);
    return t;
}

Matrix Matrix::inverse() const {
    if (r_ != c_) throw std::invalid_argument("inverse of a non-square matrix");
    const std::size_t n = r_;
    Matrix a = *this, inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a(piv, col) == 0) ++piv;
        if (piv == n) throw std::domain_error("singular matrix");
        if (piv != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(piv, j), a(col, j));
                std::swap(inv(piv, j), inv(col, j));
            }
        Rational p = a(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) /= p;
            inv(col, j) /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a(i, col) == 0) continue;
            Rational f = a(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

bool Matrix::is_invertible() const {
    try {
        (void)inverse();
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

Matrix Matrix::columns(std::size_t first, std::size_t count) const {
    Matrix m(r_, count);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < count; ++j) m(i, j) = (*this)(i, first + j);
    return m;
}

Matrix Matrix::rows_block(std::size_t first, std::size_t count) const {
    Matrix m(count, c_);
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < c_; ++j) m(i, j) = (*this)(first + i, j);
    return m;
}

Matrix Matrix::hconcat(const Matrix& o) const {
    if (r_ != o.r_) throw std::invalid_argument("matrix shape mismatch");
    Matrix m(r_, c_ + o.c_);
    for (std::size_t i = 0; i < r_; ++i) {
        for (std::size_t j = 0; j < c_; ++j) m(i, j) = (*this)(i, j);
        for (std::size_t j = 0; j < o.c_; ++j) m(i, c_ + j) = o(i, j);
    }
    return m;
}

std::string Matrix::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < r_; ++i) {
        s += i ? ",[" : "[";
        for (std::size_t j = 0; j < c_; ++j) {
            if (j) s += ",";
            s += ghost::to_string((*this)(i, j));
        }
        s += "]";
    }
    return s + "]";
}

}  // namespace ghost
