#pragma once

// Exact scalars and the matrix algebra B = M_d(Q).
//
// Basis of B: matrix units E_pq, flat index p*d + q. A Matrix doubles as the
// coefficient vector of an algebra element in that basis.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace freeconv {

using Rational = mpq_class;

Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& q);

class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

    static Matrix identity(std::size_t dim);
    // Matrix unit E_pq.
    static Matrix unit(std::size_t dim, std::size_t p, std::size_t q);
    // Matrix unit by flat basis index.
    static Matrix basis(std::size_t dim, std::size_t index);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t basis_size() const noexcept { return entries_.size(); }

    Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
    Rational& operator[](std::size_t k) { return entries_[k]; }
    const Rational& operator[](std::size_t k) const { return entries_[k]; }

    std::span<const Rational> entries() const noexcept { return entries_; }

    bool is_zero() const;
    bool is_identity() const;

    // this += c * m
    void add_scaled(const Rational& c, const Matrix& m);

    Matrix& operator+=(const Matrix& other);
    Matrix& operator-=(const Matrix& other);
    Matrix& operator*=(const Rational& c);

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator-(Matrix a);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Rational& c, Matrix a) { return a *= c; }
    friend bool operator==(const Matrix& a, const Matrix& b);

    std::string str() const;

private:
    std::size_t dim_ = 0;
    std::vector<Rational> entries_;
};

using AlgebraElement = Matrix;

// Product into an existing buffer; out must not alias a or b.
void multiply_into(const Matrix& a, const Matrix& b, Matrix& out);

Rational determinant(const Matrix& a);

// Exact Gauss-Jordan inverse; nullopt when the determinant vanishes.
std::optional<Matrix> inverse(const Matrix& a);

// A Q-linear endomorphism of B, stored as a d^2 x d^2 matrix acting on the
// coefficient vector (column convention: image = M * vec(x)).
class LinMap {
public:
    LinMap() = default;
    explicit LinMap(Matrix m);

    static LinMap identity(std::size_t algebra_dim);
    static LinMap left_multiplication(const Matrix& c);
    static LinMap right_multiplication(const Matrix& c);

    std::size_t algebra_dim() const noexcept { return algebra_dim_; }
    const Matrix& matrix() const noexcept { return m_; }

    Matrix apply(const Matrix& x) const;

    friend LinMap operator*(const LinMap& a, const LinMap& b) { return LinMap(a.m_ * b.m_); }
    friend bool operator==(const LinMap& a, const LinMap& b) { return a.m_ == b.m_; }

private:
    std::size_t algebra_dim_ = 0;
    Matrix m_;
};

std::optional<LinMap> inverse(const LinMap& l);

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::int64_t uniform(std::int64_t lo, std::int64_t hi);
    // numerator in [-bound, bound], denominator in [1, bound]
    Rational rational(std::int64_t bound);
    Matrix element(std::int64_t bound, std::size_t dim);
    Matrix invertible_element(std::int64_t bound, std::size_t dim);

    std::mt19937_64& engine() noexcept { return engine_; }

private:
    std::mt19937_64 engine_;
};

Matrix random_element(std::uint64_t seed, std::int64_t bound, std::size_t dim);

} // namespace freeconv
