#pragma once

// Boxed convolutions and the S-, U- and S'-transforms.
//
// For n >= 1 the four convolutions sum over trees with units interleaved:
//   box     sum_{t in Y_n}     (f u g)_{R(t)}        (x_1, 1, ..., x_n, 1)
//   line    sum_{t in Y_n}     (f u g)_{R(t)}        (1, x_1, ..., 1, x_n)
//   red     sum_{t in Y_n-1}   (g u f)_{(|, R(t))}   (x_1, 1, ..., 1, x_n)
//   redred  sum_{t in Y_n}     (f u g)_{(|, R(t))}   (1, x_1, ..., x_n, 1)
// with degree-0 terms g_0, g_0, 0 and g_1(1).

#include <cstddef>
#include <cstdint>
#include <string>

#include "freeconv/report.hpp"
#include "freeconv/series.hpp"

namespace freeconv {

enum class BoxVariant { box, line, red, redred };

BoxVariant parse_box_variant(const std::string& name);
std::string to_string(BoxVariant v);

// Order: min(N_f, N_g) for box and line, min(N_f, N_g + 1) for red,
// min(N_f, N_g - 1) for redred.
TruncSeries boxconv(BoxVariant variant, const TruncSeries& f, const TruncSeries& g);

// S_f with f^{o-1} = I.S_f, for f in G^I. Order N - 1.
// Both routes are computed and must agree.
TruncSeries s_transform(const TruncSeries& f);
// Strip the leading I off the compositional inverse.
TruncSeries s_transform_by_inverse(const TruncSeries& f);
// Iterate S = (F o (I.S))^{-1} from S = F_0^{-1}; each pass fixes one degree.
TruncSeries s_transform_by_fixed_point(const TruncSeries& f);

// U_f = S_f^{-1} I S_f. Order N.
TruncSeries u_transform(const TruncSeries& f);
// (F.I) o (I.S_f)
TruncSeries u_transform_by_s(const TruncSeries& f);
// (F.I) o (I.F)^{o-1}
TruncSeries u_transform_by_inverse(const TruncSeries& f);

// S'_F with S'_F.I = (F.I)^{o-1}, for f = I.F in G^I. Order N - 1.
TruncSeries s_prime(const TruncSeries& f);

// The two factorizations through red and redred hold for f, g in I.Mult[[B]];
// these series lie in Mult[[B]] but not in I.Mult[[B]].
struct FactorizationWitness {
    TruncSeries f;
    TruncSeries g;
};
FactorizationWitness factorization_counterexample(std::size_t dim, std::size_t order);

// Monoid and group laws, S dual path, U expressions, S' relations.
Report verify_series_laws(std::size_t order, std::size_t dim, std::size_t trials, std::uint64_t seed);
// Convolution factorizations, class facts, the S and U convolution rules.
Report verify_boxconv_identities(std::size_t order, std::size_t dim, std::size_t trials, std::uint64_t seed);
// Both of the above.
Report verify_transform_identities(std::size_t order, std::size_t dim, std::size_t trials, std::uint64_t seed);

} // namespace freeconv
