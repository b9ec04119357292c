#pragma once

// Verification reports: one entry per identity, witness present iff failed.

#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "freeconv/series.hpp"

namespace freeconv {

struct Check {
    std::string id;
    std::string statement;
    nlohmann::json params = nlohmann::json::object();
    bool pass = true;
    std::optional<nlohmann::json> witness;

    // Keeps the first witness; later failures only count.
    void fail(nlohmann::json w);
    void expect(bool ok, const nlohmann::json& w);
    // lhs and rhs must agree through their common order, which must reach
    // min_order. context is attached to the witness.
    void expect_agree(const TruncSeries& lhs, const TruncSeries& rhs, std::size_t min_order,
                      const nlohmann::json& context);
};

struct Report {
    std::string suite;
    std::uint64_t seed = 0;
    std::size_t order = 0;
    std::size_t dim = 0;
    std::size_t trials = 0;
    // A deque keeps references returned by add() valid.
    std::deque<Check> checks;
    double elapsed_seconds = 0;

    bool all_pass() const;
    Check& add(std::string id, std::string statement, nlohmann::json params = nlohmann::json::object());
    const Check* find(const std::string& id) const;
    void append(const Report& other);
    // Without the timing field, the output is a function of the inputs.
    nlohmann::json to_json(bool with_timing = true) const;
};

} // namespace freeconv
