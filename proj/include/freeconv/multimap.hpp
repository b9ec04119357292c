#pragma once

// Multilinear maps B^{x n} -> B as dense tensors over the matrix-unit basis.
//
// Value at flat index sum_s i_s * D^(n-1-s), D = d^2: the first slot is the
// most significant digit. Degree 0 holds one value, the image of 1.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "freeconv/algebra.hpp"

namespace freeconv {

class MultiMap {
public:
    MultiMap() = default;
    // The zero map.
    MultiMap(std::size_t dim, std::size_t arity);

    static MultiMap constant(const Matrix& value);
    // x |-> x.
    static MultiMap identity(std::size_t dim);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t arity() const noexcept { return arity_; }
    std::size_t basis_size() const noexcept { return dim_ * dim_; }
    std::size_t size() const noexcept { return values_.size(); }

    Matrix& operator[](std::size_t flat) { return values_[flat]; }
    const Matrix& operator[](std::size_t flat) const { return values_[flat]; }
    const Matrix& at(std::span<const std::size_t> indices) const;

    bool is_zero() const;

    // Multilinear evaluation.
    Matrix eval(std::span<const Matrix> args) const;

    MultiMap& operator+=(const MultiMap& other);
    MultiMap& operator-=(const MultiMap& other);
    MultiMap& operator*=(const Rational& c);

    friend MultiMap operator+(MultiMap a, const MultiMap& b) { return a += b; }
    friend MultiMap operator-(MultiMap a, const MultiMap& b) { return a -= b; }
    friend MultiMap operator-(MultiMap a) { return a *= Rational(-1); }
    friend bool operator==(const MultiMap& a, const MultiMap& b);

private:
    std::size_t dim_ = 0;
    std::size_t arity_ = 0;
    std::vector<Matrix> values_;
};

// (a x b)(x_1..x_{p+q}) = a(x_1..x_p) b(x_{p+1}..x_{p+q}).
MultiMap times(const MultiMap& a, const MultiMap& b);

// Replaces slot `pos` of t by the map g; g's slots take its place.
MultiMap contract_slot(const MultiMap& t, std::size_t pos, const MultiMap& g);

// Sets slot `pos` of t to a fixed value.
MultiMap fix_slot(const MultiMap& t, std::size_t pos, const Matrix& value);

// f(g_1(...), ..., g_k(...)) with the g_i on consecutive blocks of slots.
MultiMap compose_slots(const MultiMap& f, std::span<const MultiMap> gs);

MultiMap left_multiply(const Matrix& b, const MultiMap& t);
MultiMap right_multiply(const MultiMap& t, const Matrix& b);
MultiMap apply_linmap(const LinMap& l, const MultiMap& t);

// A degree-1 map as the d^2 x d^2 matrix of its action.
LinMap to_linmap(const MultiMap& t);
MultiMap from_linmap(const LinMap& l);

} // namespace freeconv
