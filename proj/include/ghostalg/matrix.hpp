#pragma once

#include "ghostalg/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace ghost {

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
    static Matrix identity(std::size_t n);

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    Matrix operator*(const Matrix& o) const;
    Matrix operator*(const Rational& s) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix transpose() const;
    Rational trace() const;
    // Throws std::domain_error if singular.
    Matrix inverse() const;
    bool is_invertible() const;
    Matrix columns(std::size_t first, std::size_t count) const;
    Matrix rows_block(std::size_t first, std::size_t count) const;
    Matrix hconcat(const Matrix& o) const;

    std::string to_string() const;
    bool operator==(const Matrix&) const = default;

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<Rational> a_;
};

}  // namespace ghost
