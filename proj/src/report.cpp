#include "freeconv/report.hpp"

#include "freeconv/json_io.hpp"

namespace freeconv {

using nlohmann::json;

void Check::fail(json w)
{
    if (pass)
        witness = std::move(w);
    pass = false;
}

void Check::expect(bool ok, const json& w)
{
    if (!ok)
        fail(w);
}

void Check::expect_agree(const TruncSeries& lhs, const TruncSeries& rhs, std::size_t min_order,
                         const json& context)
{
    const std::size_t common = common_order(lhs, rhs);
    if (common < min_order) {
        json w = context;
        w["reason"] = "compared order " + std::to_string(common) + " is below " + std::to_string(min_order);
        fail(std::move(w));
        return;
    }
    if (auto diff = first_difference(lhs, rhs)) {
        json w = context;
        w["degree"] = *diff;
        w["lhs"] = to_json(lhs.truncated(*diff));
        w["rhs"] = to_json(rhs.truncated(*diff));
        fail(std::move(w));
    }
}

bool Report::all_pass() const
{
    for (const auto& c : checks)
        if (!c.pass)
            return false;
    return true;
}

Check& Report::add(std::string id, std::string statement, json params)
{
    checks.push_back(Check{std::move(id), std::move(statement), std::move(params), true, std::nullopt});
    return checks.back();
}

const Check* Report::find(const std::string& id) const
{
    for (const auto& c : checks)
        if (c.id == id)
            return &c;
    return nullptr;
}

void Report::append(const Report& other)
{
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    elapsed_seconds += other.elapsed_seconds;
}

json Report::to_json(bool with_timing) const
{
    json cs = json::array();
    for (const auto& c : checks) {
        json j{{"id", c.id}, {"statement", c.statement}, {"params", c.params}, {"status", c.pass ? "pass" : "fail"}};
        if (c.witness)
            j["witness"] = *c.witness;
        cs.push_back(std::move(j));
    }
    json out{{"suite", suite}, {"seed", seed},   {"order", order},
             {"dim", dim},     {"trials", trials}, {"status", all_pass() ? "pass" : "fail"},
             {"checks", std::move(cs)}};
    if (with_timing)
        out["elapsed"] = elapsed_seconds;
    return out;
}

} // namespace freeconv
