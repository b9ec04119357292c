#include <doctest.h>

#include <functional>
#include <vector>

#include "freeconv/error.hpp"
#include "freeconv/operad.hpp"
#include "freeconv/treeeval.hpp"

using namespace freeconv;

namespace {

const char* const kNineVertex = "(((|,|),((|,|),|)),(|,((|,(|,|)),|)))";

std::vector<Matrix> random_args(Rng& rng, std::size_t n, std::size_t d)
{
    std::vector<Matrix> xs;
    for (std::size_t i = 0; i < n; ++i)
        xs.push_back(rng.element(3, d));
    return xs;
}

Matrix ev(const TruncSeries& f, std::size_t k, std::vector<Matrix> args) { return f[k].eval(args); }

// (x_1, 1, x_2, 1, ...) or (1, x_1, 1, x_2, ...) of total length len.
std::vector<Matrix> interleave_units(const std::vector<Matrix>& xs, std::size_t len, bool free_odd)
{
    std::vector<Matrix> out;
    std::size_t next = 0;
    for (std::size_t p = 1; p <= len; ++p)
        out.push_back((p % 2 == 1) == free_odd ? xs.at(next++) : Matrix::identity(xs.front().dim()));
    return out;
}

} // namespace

TEST_CASE("tree evaluation base cases")
{
    Rng rng(1);
    auto f = random_series(rng, 2, 4, 3);
    auto g = random_series(rng, 2, 4, 3);
    CHECK(tree_eval(f, Tree(), std::vector<Matrix>{}) == Matrix::identity(2));
    CHECK(alt_tree_eval(f, g, Tree(), std::vector<Matrix>{}) == Matrix::identity(2));
    auto x = random_args(rng, 4, 2);
    CHECK(tree_eval(f, dot(), std::span(x).first(1)) == ev(f, 1, {x[0]}));
    CHECK(alt_tree_eval(f, g, dot(), std::span(x).first(1)) == ev(g, 1, {x[0]}));
    for (std::size_t n = 1; n <= 4; ++n)
        CHECK(tree_eval(f, right_comb(n), std::span(x).first(n)) == f[n].eval(std::span(x).first(n)));
    CHECK_THROWS_AS(tree_eval(f, dot(), x), DomainError);
    CHECK_THROWS_AS(tree_eval(f.truncated(1), right_comb(2), std::span(x).first(2)), DomainError);
}

TEST_CASE("nine-vertex tree expansions")
{
    Rng rng(2);
    auto f = random_series(rng, 2, 3, 3);
    auto g = random_series(rng, 2, 3, 3);
    const Tree t = parse_tree(kNineVertex);
    REQUIRE(t.size() == 9);
    auto x = random_args(rng, 9, 2);
    // f_3(f_2(f_1(x1)x2, f_1(x3)x4)x5, x6, f_2(x7,x8)x9)
    Matrix expect = ev(f, 3,
                       {ev(f, 2, {ev(f, 1, {x[0]}) * x[1], ev(f, 1, {x[2]}) * x[3]}) * x[4], x[5],
                        ev(f, 2, {x[6], x[7]}) * x[8]});
    CHECK(tree_eval(f, t, x) == expect);
    // g_3(f_2(g_1(x1)x2, g_1(x3)x4)x5, x6, f_2(x7,x8)x9)
    Matrix alt = ev(g, 3,
                    {ev(f, 2, {ev(g, 1, {x[0]}) * x[1], ev(g, 1, {x[2]}) * x[3]}) * x[4], x[5],
                     ev(f, 2, {x[6], x[7]}) * x[8]});
    CHECK(alt_tree_eval(f, g, t, x) == alt);
    CHECK(alt_tree_eval(f, f, t, x) == expect);
}

TEST_CASE("tensor evaluation matches pointwise evaluation")
{
    Rng rng(3);
    auto f = random_series(rng, 2, 6, 2);
    auto g = random_series(rng, 2, 6, 2);
    for (std::size_t n = 1; n <= 4; ++n) {
        auto x = random_args(rng, n, 2);
        for (const auto& t : enumerate_trees(n))
            CHECK(tree_tensor(f, t).eval(x) == tree_eval(f, t, x));
    }
    for (std::size_t len = 1; len <= 6; ++len)
        for (bool odd : {true, false}) {
            const std::size_t free = odd ? (len + 1) / 2 : len / 2;
            auto x = random_args(rng, std::max<std::size_t>(free, 1), 2);
            x.resize(free);
            if (free == 0)
                continue;
            const auto args = interleave_units(x, len, odd);
            for (const auto& t : enumerate_trees(len)) {
                auto tens = alt_tree_tensor(f, g, t, odd ? FreeSlots::odd : FreeSlots::even);
                CHECK(tens.arity() == free);
                CHECK(tens.eval(x) == alt_tree_eval(f, g, t, args));
            }
        }
}

TEST_CASE("substitution of right-planted trees")
{
    Rng rng(4);
    auto f = random_gi(rng, 2, 5, 2);
    for (std::size_t k = 1; k <= 3; ++k)
        for (const auto& tau : enumerate_trees(k)) {
            // All sigma tuples with total planted size <= 5.
            std::function<void(std::vector<Tree>&, std::size_t)> rec = [&](std::vector<Tree>& sig, std::size_t used) {
                if (sig.size() == k) {
                    std::vector<Tree> planted;
                    for (const auto& s : sig)
                        planted.push_back(over(s, dot()));
                    const std::size_t n = used;
                    auto x = random_args(rng, n, 2);
                    std::vector<Matrix> inner;
                    std::size_t pos = 0;
                    for (const auto& s : sig) {
                        inner.push_back(tree_eval(f, s, std::span(x).subspan(pos, s.size())) * x[pos + s.size()]);
                        pos += s.size() + 1;
                    }
                    CHECK(tree_eval(f, substitute(tau, planted), x) == tree_eval(f, tau, inner));
                    return;
                }
                for (std::size_t s = 0; used + s + 1 + (k - sig.size() - 1) <= 5; ++s)
                    for (const auto& t : enumerate_trees(s)) {
                        sig.push_back(t);
                        rec(sig, used + s + 1);
                        sig.pop_back();
                    }
            };
            std::vector<Tree> sig;
            rec(sig, 0);
        }
}

TEST_CASE("two-series substitution with Y^be-planted slots")
{
    Rng rng(5);
    auto f = random_gi(rng, 2, 4, 2);
    auto g = random_gi(rng, 2, 4, 2);
    // rho in Y^be_2k, sigma_i in Y^be with total size <= 6.
    for (std::size_t two_k : {2u, 4u})
        for (const auto& rho : enumerate_ybe(two_k)) {
            std::function<void(std::vector<Tree>&, std::size_t)> rec = [&](std::vector<Tree>& sig, std::size_t used) {
                if (sig.size() == two_k) {
                    std::vector<Tree> planted;
                    for (const auto& s : sig)
                        planted.push_back(over(s, dot()));
                    auto x = random_args(rng, used, 2);
                    std::vector<Matrix> inner;
                    std::size_t pos = 0;
                    for (const auto& s : sig) {
                        auto block = std::span(x).subspan(pos, s.size());
                        const bool starts_x = pos % 2 == 0;
                        Matrix v = starts_x ? alt_tree_eval(f, g, s, block) : alt_tree_eval(g, f, s, block);
                        inner.push_back(v * x[pos + s.size()]);
                        pos += s.size() + 1;
                    }
                    CHECK(alt_tree_eval(f, g, substitute(rho, planted), x) == alt_tree_eval(f, g, rho, inner));
                    return;
                }
                for (std::size_t s = 0; used + s + 1 + (two_k - sig.size() - 1) <= 6; s += 2)
                    for (const auto& t : enumerate_ybe(s)) {
                        sig.push_back(t);
                        rec(sig, used + s + 1);
                        sig.pop_back();
                    }
            };
            std::vector<Tree> sig;
            rec(sig, 0);
        }
}

TEST_CASE("two-series substitution needs left absorption")
{
    Rng rng(15);
    auto f = random_series(rng, 2, 4, 2);
    auto g = random_series(rng, 2, 4, 2);
    // rho in Y^be_2 with slots (|/dot, sigma/dot), sigma in Y^be_2.
    const Tree rho = over(dot(), dot());
    const Tree sigma = over(dot(), dot());
    const std::vector<Tree> planted{dot(), over(sigma, dot())};
    auto x = random_args(rng, 4, 2);
    std::vector<Matrix> inner{x[0], alt_tree_eval(g, f, sigma, std::span(x).subspan(1, 2)) * x[3]};
    CHECK_FALSE(alt_tree_eval(f, g, substitute(rho, planted), x) == alt_tree_eval(f, g, rho, inner));
}

TEST_CASE("operad evaluation agrees with tree evaluation")
{
    Rng rng(6);
    for (int trial = 0; trial < 3; ++trial) {
        auto f = random_gi(rng, 2, 5, 2);
        for (std::size_t n = 0; n <= 5; ++n) {
            auto x = random_args(rng, n, 2);
            for (const auto& t : enumerate_trees(n))
                CHECK(operad_eval(f, t, x) == tree_eval(f, t, x));
        }
    }
}

TEST_CASE("operad word of the right comb is the plain tensor")
{
    Rng rng(7);
    auto f = random_gi(rng, 2, 4, 2);
    auto x = random_args(rng, 4, 2);
    TensorElement expect = TensorElement::word(x[0]);
    for (std::size_t i = 1; i < 4; ++i)
        expect = tensor(expect, TensorElement::word(x[i]));
    CHECK(phi_word(f, right_comb(4), x) == expect);
    CHECK(operad_eval(f, right_comb(4), x) == f[4].eval(x));
}

TEST_CASE("operad evaluation rejects series outside I.Mult")
{
    Rng rng(8);
    auto f = random_series(rng, 2, 3, 2);
    f[0] = MultiMap(2, 0);
    auto x = random_args(rng, 2, 2);
    CHECK_THROWS_AS(operad_eval(f, right_comb(2), x), DomainError);
}

TEST_CASE("duplicial relations on random words")
{
    Rng rng(9);
    auto f = random_gi(rng, 2, 5, 2);
    for (int t = 0; t < 10; ++t) {
        auto u = random_tensor_element(rng, 2, 2, 2);
        auto v = random_tensor_element(rng, 2, 2, 2);
        auto w = random_tensor_element(rng, 2, 1, 2);
        auto c = check_duplicial(f, u, v, w);
        CHECK(c.nested_action);
        CHECK(c.associative);
        CHECK(c.mixed);
    }
    // The first relation uses left absorption: it fails for a generic series.
    auto h = random_series(rng, 2, 5, 2);
    bool some_fail = false;
    for (int t = 0; t < 5; ++t) {
        auto u = random_tensor_element(rng, 2, 2, 2);
        auto v = random_tensor_element(rng, 2, 2, 2);
        auto w = random_tensor_element(rng, 2, 1, 2);
        some_fail = some_fail || !check_duplicial(h, u, v, w).nested_action;
    }
    CHECK(some_fail);
}
