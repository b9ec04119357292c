#pragma once

// Named verification suites shared by the CLI and the acceptance binary.
// Combinatorial suites use fixed exhaustive sizes; the series suites take
// order, dimension, trial count and seed.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "freeconv/report.hpp"

namespace freeconv {

// |Y_n| = |NCP_n| = C_n for n <= max_n (at most 10).
Report verify_catalan_counts(std::size_t max_n = 10);
// phi on the first values, the nine-vertex tree and an R image.
Report verify_phi_golden();
// Brute-force Kreweras = Kreweras as a Catalan isomorphism for n <= max_n,
// plus the worked example on [8].
Report verify_kreweras(std::size_t max_n = 7);
// {phi(R(t))} = {P u K(P)} for n <= max_n, and a tree with
// phi(R(t)) != phi(t) u K(phi(t)).
Report verify_phi_rmap(std::size_t max_n = 5);
// Commuting diagrams, compose/decompose round trips, named bijections.
Report verify_bijections(std::size_t max_n = 6);
// operad_eval = tree_eval on Y_{<= max_n} and the duplicial relations.
Report verify_operad(std::size_t max_n, std::size_t dim, std::size_t trials, std::uint64_t seed);

const std::vector<std::string>& suite_names();
// transforms | freeprob | bijections | operad | all. Throws ParseError for
// an unknown name.
Report run_suite(const std::string& name, std::size_t order, std::size_t dim, std::size_t trials,
                 std::uint64_t seed);

} // namespace freeconv
