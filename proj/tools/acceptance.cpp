// One PASS/FAIL line per acceptance criterion. Optional arguments select
// criteria by number; FREECONV_SEED overrides the default seed.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "freeconv/freeprob.hpp"
#include "freeconv/transforms.hpp"
#include "freeconv/verify.hpp"

using namespace freeconv;

namespace {

struct Criterion {
    int id;
    const char* title;
    double time_limit;  // seconds; 0 means none
    std::function<Report(std::uint64_t)> run;
};

std::string failed_ids(const Report& r)
{
    std::string s;
    for (const auto& c : r.checks)
        if (!c.pass)
            s += (s.empty() ? "" : ", ") + c.id;
    return s;
}

} // namespace

int main(int argc, char** argv)
{
    std::uint64_t seed = 42;
    if (const char* env = std::getenv("FREECONV_SEED"))
        seed = std::strtoull(env, nullptr, 10);

    const std::vector<Criterion> criteria{
        {1, "Catalan counts of trees and noncrossing partitions, n <= 10", 10,
         [](std::uint64_t) { return verify_catalan_counts(10); }},
        {2, "phi golden values", 0, [](std::uint64_t) { return verify_phi_golden(); }},
        {3, "Kreweras dual path for n <= 7 and the worked example on [8]", 30,
         [](std::uint64_t) { return verify_kreweras(7); }},
        {4, "phi(R(Y_n)) = {P u K(P)} for n <= 5, and the size-2 negative witness", 0,
         [](std::uint64_t) { return verify_phi_rmap(5); }},
        {5, "series laws, S dual path and the U expressions at N=4, d=2, 20 instances", 60,
         [](std::uint64_t s) { return verify_series_laws(4, 2, 20, s); }},
        {6, "boxed convolution identities and the S rule at N=4, d=2, 20 instances", 300,
         [](std::uint64_t s) { return verify_boxconv_identities(4, 2, 20, s + 1); }},
        {7, "product of free variables at N=4, d=2, 10 instances", 600,
         [](std::uint64_t s) { return verify_freeprob_identities(4, 2, 10, s); }},
        {8, "splitting trees, vanishing, Y^be restriction and Pi extraction", 0,
         [](std::uint64_t s) { return verify_freeprob_structure(4, 2, s); }},
        {9, "commuting diagrams, family round trips and named bijections, n <= 6", 60,
         [](std::uint64_t) { return verify_bijections(6); }},
        {10, "operad evaluation on Y_{<=5} and the duplicial relations at d=2", 0,
         [](std::uint64_t s) { return verify_operad(5, 2, 5, s); }},
    };

    std::set<int> selected;
    for (int i = 1; i < argc; ++i)
        selected.insert(std::atoi(argv[i]));

    bool all_pass = true;
    for (const auto& c : criteria) {
        if (!selected.empty() && !selected.count(c.id))
            continue;
        const auto start = std::chrono::steady_clock::now();
        std::string reason;
        bool pass = false;
        try {
            const Report r = c.run(seed);
            pass = r.all_pass();
            if (!pass)
                reason = "failed checks: " + failed_ids(r);
        } catch (const std::exception& e) {
            reason = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (pass && c.time_limit > 0 && secs >= c.time_limit) {
            pass = false;
            reason = "over the " + std::to_string(static_cast<int>(c.time_limit)) + " s budget";
        }
        all_pass = all_pass && pass;
        std::printf("%s criterion %d: %s (%.2f s)%s%s\n", pass ? "PASS" : "FAIL", c.id, c.title, secs,
                    reason.empty() ? "" : " -- ", reason.c_str());
        std::fflush(stdout);
    }
    return all_pass ? 0 : 1;
}
