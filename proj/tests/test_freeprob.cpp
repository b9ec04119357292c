#include <doctest.h>

#include <vector>

#include "freeconv/error.hpp"
#include "freeconv/freeprob.hpp"
#include "freeconv/transforms.hpp"
#include "freeconv/treeeval.hpp"

using namespace freeconv;

namespace {

Matrix ev(const TruncSeries& f, std::size_t k, std::vector<Matrix> args) { return f[k].eval(args); }

Tree planted() { return wedge(dot(), Tree::leaf()); }

// k = I.K with K_0 = 1 and K_1(x) = x: the scalar semicircle-like input.
TruncSeries semicircle_like(std::size_t order)
{
    auto big_k = TruncSeries::zero(1, order - 1);
    big_k[0] = MultiMap::constant(Matrix::identity(1));
    big_k[1] = MultiMap::identity(1);
    return left_I(big_k);
}

void require_failure_at_degree(const Report& r, int degree)
{
    for (const auto& c : r.checks) {
        CHECK_FALSE(c.pass);
        REQUIRE(c.witness.has_value());
        CHECK((*c.witness)["degree"] == degree);
    }
}

} // namespace

TEST_CASE("moments from cumulants in low degree")
{
    Rng rng(11);
    const auto k = random_gi(rng, 2, 4, 2);
    const auto m = moments_from_cumulants(k);
    CHECK(m[0].is_zero());
    for (int trial = 0; trial < 5; ++trial) {
        const Matrix x1 = rng.element(3, 2);
        const Matrix x2 = rng.element(3, 2);
        CHECK(ev(m, 1, {x1}) == ev(k, 1, {x1}));
        CHECK(ev(m, 2, {x1, x2}) == ev(k, 2, {x1, x2}) + ev(k, 1, {ev(k, 1, {x1}) * x2}));
    }
}

TEST_CASE("cumulants from moments in low degree")
{
    Rng rng(12);
    const auto m = random_gi(rng, 2, 4, 2);
    const auto k = cumulants_from_moments(m);
    for (int trial = 0; trial < 5; ++trial) {
        const Matrix x1 = rng.element(3, 2);
        const Matrix x2 = rng.element(3, 2);
        CHECK(ev(k, 1, {x1}) == ev(m, 1, {x1}));
        CHECK(ev(k, 2, {x1, x2}) == ev(m, 2, {x1, x2}) - ev(k, 1, {ev(k, 1, {x1}) * x2}));
    }
}

TEST_CASE("moment and cumulant conversions are mutually inverse")
{
    Rng rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        const auto k = random_gi(rng, 2, 4, 2);
        CHECK(agree(cumulants_from_moments(moments_from_cumulants(k)), k));
        const auto m = random_gi(rng, 2, 4, 2);
        CHECK(agree(moments_from_cumulants(cumulants_from_moments(m)), m));
    }
}

TEST_CASE("conversions reject series outside G^I")
{
    Rng rng(14);
    const auto f = random_series(rng, 2, 3, 2);
    CHECK_THROWS_AS(moments_from_cumulants(f), DomainError);
    CHECK_THROWS_AS(cumulants_from_moments(f), DomainError);
    const auto k = random_gi(rng, 2, 3, 2);
    CHECK_THROWS_AS(product_moments_oracle(k, f, 3), DomainError);
}

TEST_CASE("speicher relations on matched and corrupted pairs")
{
    Rng rng(15);
    for (std::size_t d : {1u, 2u}) {
        const auto k = random_gi(rng, d, 4, 2);
        auto m = moments_from_cumulants(k);
        CHECK(speicher_relation_check(k, m).all_pass());

        MultiMap bump = MultiMap::constant(Matrix::identity(d));
        for (int i = 0; i < 3; ++i)
            bump = times(bump, MultiMap::identity(d));
        m[3] += bump;
        const Report bad = speicher_relation_check(k, m);
        CHECK(bad.checks.size() == 2);
        require_failure_at_degree(bad, 3);
    }
}

TEST_CASE("mixed tree cumulants")
{
    Rng rng(16);
    const auto ka = random_gi(rng, 2, 4, 2);
    const auto kb = random_gi(rng, 2, 4, 2);
    const Matrix x = rng.element(3, 2);
    const Matrix one = Matrix::identity(2);

    SUBCASE("unmixed comb is the plain cumulant")
    {
        std::vector<LetterArg> args;
        std::vector<Matrix> xs;
        for (int i = 0; i < 3; ++i) {
            xs.push_back(rng.element(3, 2));
            args.push_back({xs.back(), Letter::A});
        }
        CHECK(mixed_tree_cumulant(right_comb(3), args, ka, kb) == ka[3].eval(xs));
    }
    SUBCASE("mixed comb vanishes")
    {
        const std::vector<LetterArg> args{{x, Letter::A}, {one, Letter::B}};
        CHECK(mixed_tree_cumulant(right_comb(2), args, ka, kb).is_zero());
    }
    SUBCASE("planted tree nests the two letters")
    {
        const std::vector<LetterArg> args{{x, Letter::A}, {one, Letter::B}};
        const Matrix value = mixed_tree_cumulant(planted(), args, ka, kb);
        CHECK(value == ev(kb, 1, {ev(ka, 1, {x})}));
        CHECK(value == x * ev(ka, 1, {one}) * ev(kb, 1, {one}));
    }
    SUBCASE("arity mismatch")
    {
        const std::vector<LetterArg> args{{x, Letter::A}};
        CHECK_THROWS_AS(mixed_tree_cumulant(right_comb(2), args, ka, kb), DomainError);
    }
}

TEST_CASE("product oracle")
{
    Rng rng(17);
    SUBCASE("degree one")
    {
        const auto ka = random_gi(rng, 2, 3, 2);
        const auto kb = random_gi(rng, 2, 3, 2);
        const auto kab = product_cumulants_oracle(ka, kb, 3);
        const Matrix one = Matrix::identity(2);
        for (int trial = 0; trial < 5; ++trial) {
            const Matrix x = rng.element(3, 2);
            CHECK(ev(kab, 1, {x}) == x * ev(ka, 1, {one}) * ev(kb, 1, {one}));
        }
    }
    SUBCASE("scalar semicircle-like inputs match the scalar convolution")
    {
        const auto k = semicircle_like(4);
        CHECK(agree(product_cumulants_oracle(k, k, 4), boxconv(BoxVariant::box, k, k)));
    }
    SUBCASE("random inputs match the boxed convolution")
    {
        for (int trial = 0; trial < 3; ++trial) {
            const auto ka = random_gi(rng, 2, 3, 2);
            const auto kb = random_gi(rng, 2, 3, 2);
            CHECK(agree(product_cumulants_oracle(ka, kb, 3), boxconv(BoxVariant::box, ka, kb)));
        }
    }
    SUBCASE("the split trees carry the whole sum")
    {
        const auto ka = random_gi(rng, 2, 3, 2);
        const auto kb = random_gi(rng, 2, 3, 2);
        CHECK(agree(product_moments_oracle(ka, kb, 3), product_moments_oracle(ka, kb, 3, true)));
    }
    SUBCASE("order beyond the inputs")
    {
        const auto ka = random_gi(rng, 2, 2, 2);
        CHECK_THROWS_AS(product_moments_oracle(ka, ka, 3), DomainError);
    }
}

TEST_CASE("free probability verifiers pass at small size")
{
    for (std::size_t d : {1u, 2u}) {
        const Report r = verify_freeprob_identities(3, d, 2, 5);
        for (const auto& c : r.checks) {
            INFO(c.id);
            CHECK(c.pass);
        }
        const Report s = verify_freeprob_structure(3, d, 5);
        for (const auto& c : s.checks) {
            INFO(c.id);
            CHECK(c.pass);
        }
    }
}

TEST_CASE("free probability reports are deterministic")
{
    const auto a = verify_freeprob_identities(3, 2, 1, 9).to_json(false);
    const auto b = verify_freeprob_identities(3, 2, 1, 9).to_json(false);
    CHECK(a.dump() == b.dump());
}
