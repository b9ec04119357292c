#pragma once

// Moments and cumulants as series, and products of two free variables.
//
// A variable a is represented by k^a = I.K^a in G^I with
// k^a_n(x_1..x_n) = kappa(x_1 a, ..., x_n a), and its moments by m = I.M with
// m_n(x_1..x_n) = E(x_1 a ... x_n a); m_0 = 0 in this representation.
// Freeness of a and b is the rule that a cumulant with mixed letters vanishes.

#include <cstddef>
#include <cstdint>
#include <span>

#include "freeconv/report.hpp"
#include "freeconv/series.hpp"
#include "freeconv/tree.hpp"

namespace freeconv {

enum class Letter { A, B };

struct LetterArg {
    Matrix coeff;
    Letter letter;
};

// m_n = sum over Y_n of k_t.
TruncSeries moments_from_cumulants(const TruncSeries& k);
// k_n = m_n - sum over the non-comb trees of Y_n of k_t.
TruncSeries cumulants_from_moments(const TruncSeries& m);

// M = K o (I + I M I).(1 + I M) and M = (1 + M I).K o (I + I M I), with
// witnesses reported in the degree of m.
Report speicher_relation_check(const TruncSeries& k, const TruncSeries& m);

// kappa_t(c_1 l_1, ..., c_n l_n) for letters l_i in {a, b}.
Matrix mixed_tree_cumulant(const Tree& t, std::span<const LetterArg> args, const TruncSeries& ka,
                           const TruncSeries& kb);

// E(x_1 ab x_2 ab ... x_n ab) as a series in G^I, summing the mixed tree
// cumulants over all of Y_2n, or over Y^be_2n only.
TruncSeries product_moments_oracle(const TruncSeries& ka, const TruncSeries& kb, std::size_t order,
                                   bool only_ybe = false);
// k^{ab} from the oracle moments.
TruncSeries product_cumulants_oracle(const TruncSeries& ka, const TruncSeries& kb, std::size_t order);

// The identities relating k^a, k^b and k^{ab} on random inputs.
Report verify_freeprob_identities(std::size_t order, std::size_t dim, std::size_t trials, std::uint64_t seed);
// Splitting, vanishing and Pi-extraction statements on trees up to size 2 * order.
Report verify_freeprob_structure(std::size_t order, std::size_t dim, std::uint64_t seed);

} // namespace freeconv
