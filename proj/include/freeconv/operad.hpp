#pragma once

// Evaluation of f_t through the tensor algebra T(B) = sum_{m >= 1} B^(x m).
//
// Two binary operations on T(B) generate everything:
//   u | v -> f(u) v    (the left B-action hits the first tensor factor)
//   u | v -> u (x) v
// Phi_f sends the tree with a leaf on the left of its root to the first and
// the tree with a leaf on the right of its root to the second; then
// f_t(x) = f(Phi_f(t)(x_1 | ... | x_n)) for f in I.Mult[[B]].

#include <cstddef>
#include <span>
#include <vector>

#include "freeconv/series.hpp"
#include "freeconv/tree.hpp"

namespace freeconv {

class TensorElement {
public:
    explicit TensorElement(std::size_t dim) : dim_(dim) {}

    // The pure tensor of length 1 holding x.
    static TensorElement word(const Matrix& x);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t max_length() const noexcept { return parts_.size(); }
    // Coefficients of the length-m component over the D^m basis words.
    const std::vector<Rational>& component(std::size_t m) const;

    TensorElement& operator+=(const TensorElement& other);
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend bool operator==(const TensorElement& a, const TensorElement& b);

    friend TensorElement tensor(const TensorElement& u, const TensorElement& v);
    friend TensorElement left_act(const Matrix& b, const TensorElement& u);

private:
    std::vector<Rational>& component_mut(std::size_t m);

    std::size_t dim_;
    // parts_[m - 1] is the length-m component, empty when zero.
    std::vector<std::vector<Rational>> parts_;
};

TensorElement tensor(const TensorElement& u, const TensorElement& v);
TensorElement left_act(const Matrix& b, const TensorElement& u);
// f(u) = sum_m f_m applied to the length-m component.
Matrix apply_series(const TruncSeries& f, const TensorElement& u);

// Phi_f(t)(x_1 | ... | x_n); t must not be a leaf.
TensorElement phi_word(const TruncSeries& f, const Tree& t, std::span<const Matrix> args);
// f(Phi_f(t)(x)), and 1 for the leaf. Requires f in I.Mult[[B]].
Matrix operad_eval(const TruncSeries& f, const Tree& t, std::span<const Matrix> args);

TensorElement random_tensor_element(Rng& rng, std::size_t dim, std::size_t max_length, std::int64_t bound);

struct DuplicialCheck {
    bool nested_action = false;  // f(f(u)v)w = f(u)f(v)w
    bool associative = false;    // (u (x) v) (x) w = u (x) (v (x) w)
    bool mixed = false;          // (f(u)v) (x) w = f(u)(v (x) w)
    bool all() const { return nested_action && associative && mixed; }
};

DuplicialCheck check_duplicial(const TruncSeries& f, const TensorElement& u, const TensorElement& v,
                               const TensorElement& w);

} // namespace freeconv
