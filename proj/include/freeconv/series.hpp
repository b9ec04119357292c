#pragma once

// Truncated multilinear function series f = (f_0, ..., f_N) over B.
//
// The order N is the highest degree known exactly. Every operation returns
// the largest order its inputs determine, so results are never padded with
// unknown terms. Comparisons run through the common order of both sides.

#include <cstddef>
#include <optional>
#include <vector>

#include "freeconv/algebra.hpp"
#include "freeconv/multimap.hpp"

namespace freeconv {

class TruncSeries {
public:
    TruncSeries() = default;
    // maps[n] must have arity n; order = maps.size() - 1.
    explicit TruncSeries(std::vector<MultiMap> maps);

    static TruncSeries zero(std::size_t dim, std::size_t order);
    // The unit 1 of the product.
    static TruncSeries one(std::size_t dim, std::size_t order);
    // The unit I of composition.
    static TruncSeries identity(std::size_t dim, std::size_t order);
    static TruncSeries constant(const Matrix& c, std::size_t order);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t order() const noexcept { return maps_.size() - 1; }
    const MultiMap& operator[](std::size_t n) const { return maps_.at(n); }
    MultiMap& operator[](std::size_t n) { return maps_.at(n); }
    const std::vector<MultiMap>& maps() const noexcept { return maps_; }

    TruncSeries truncated(std::size_t order) const;
    // Lowest degree with a nonzero map; order + 1 when all stored maps vanish.
    std::size_t valuation() const;

    TruncSeries& operator+=(const TruncSeries& other);
    TruncSeries& operator-=(const TruncSeries& other);

    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }

private:
    std::size_t dim_ = 0;
    std::vector<MultiMap> maps_;
};

std::size_t common_order(const TruncSeries& f, const TruncSeries& g);
// First degree where f and g differ, through the common order.
std::optional<std::size_t> first_difference(const TruncSeries& f, const TruncSeries& g);
bool agree(const TruncSeries& f, const TruncSeries& g);

// (f.g)_n = sum_k f_k(x_1..x_k) g_{n-k}(x_{k+1}..x_n).
TruncSeries mul(const TruncSeries& f, const TruncSeries& g);
// Substitution of g into f; needs g_0 = 0.
TruncSeries compose(const TruncSeries& f, const TruncSeries& g);
// Product inverse; needs f_0 invertible.
TruncSeries mult_inverse(const TruncSeries& f);
// Composition inverse; needs f in G^dif.
TruncSeries comp_inverse(const TruncSeries& f);

// I.F and F.I.
TruncSeries left_I(const TruncSeries& f);
TruncSeries right_I(const TruncSeries& f);
// F with f = I.F, read off as F_n(x) = f_{n+1}(1, x).
TruncSeries strip_left_I(const TruncSeries& f);
// F with f = F.I, read off as F_n(x) = f_{n+1}(x, 1).
TruncSeries strip_right_I(const TruncSeries& f);

bool in_ginv(const TruncSeries& f);
bool in_gdif(const TruncSeries& f);
// f_0 = 0, f_1(1) invertible, f_n(x_1, ...) = x_1 f_n(1, ...).
bool in_gi(const TruncSeries& f);
// The left-absorption law alone.
bool in_I_mult(const TruncSeries& f);

TruncSeries random_series(Rng& rng, std::size_t dim, std::size_t order, std::int64_t bound);
// Random with invertible constant term.
TruncSeries random_ginv(Rng& rng, std::size_t dim, std::size_t order, std::int64_t bound);
// I.F with F random in G^inv, of the given order.
TruncSeries random_gi(Rng& rng, std::size_t dim, std::size_t order, std::int64_t bound);

} // namespace freeconv
