#include <doctest.h>

#include <vector>

#include "freeconv/error.hpp"
#include "freeconv/transforms.hpp"
#include "freeconv/treeeval.hpp"

using namespace freeconv;

namespace {

Matrix ev(const TruncSeries& f, std::size_t k, std::vector<Matrix> args) { return f[k].eval(args); }

// Alternating evaluation of a tree with the given argument pattern, summed
// over trees, for comparison with the tensor route.
Matrix pointwise_box(const TruncSeries& f, const TruncSeries& g, const std::vector<Matrix>& xs)
{
    const std::size_t d = f.dim();
    std::vector<Matrix> args;
    for (const auto& x : xs) {
        args.push_back(x);
        args.push_back(Matrix::identity(d));
    }
    Matrix sum(d);
    for (const auto& t : enumerate_trees(xs.size()))
        sum += alt_tree_eval(f, g, rmap(t), args);
    return sum;
}

} // namespace

TEST_CASE("box variant names")
{
    for (auto v : {BoxVariant::box, BoxVariant::line, BoxVariant::red, BoxVariant::redred})
        CHECK(parse_box_variant(to_string(v)) == v);
    CHECK_THROWS_AS(parse_box_variant("boxed"), ParseError);
}

TEST_CASE("boxed convolution in low degree")
{
    Rng rng(21);
    const auto f = random_series(rng, 2, 3, 2);
    const auto g = random_series(rng, 2, 3, 2);
    const Matrix one = Matrix::identity(2);
    const auto box = boxconv(BoxVariant::box, f, g);
    const auto redred = boxconv(BoxVariant::redred, f, g);
    const auto red = boxconv(BoxVariant::red, f, g);
    CHECK(box[0][0] == g[0][0]);
    CHECK(red[0].is_zero());
    CHECK(redred[0][0] == ev(g, 1, {one}));
    for (int trial = 0; trial < 5; ++trial) {
        const Matrix x1 = rng.element(3, 2);
        const Matrix x2 = rng.element(3, 2);
        CHECK(ev(box, 1, {x1}) == ev(g, 1, {ev(f, 1, {x1})}));
        CHECK(ev(box, 2, {x1, x2}) ==
              ev(g, 1, {ev(f, 2, {x1, ev(g, 1, {one}) * x2})}) + ev(g, 2, {ev(f, 1, {x1}), ev(f, 1, {x2})}));
        CHECK(ev(box, 2, {x1, x2}) == pointwise_box(f, g, {x1, x2}));
    }
}

TEST_CASE("boxed convolution orders and mismatches")
{
    Rng rng(22);
    const auto f = random_series(rng, 2, 4, 2);
    const auto g = random_series(rng, 2, 3, 2);
    CHECK(boxconv(BoxVariant::box, f, g).order() == 3);
    CHECK(boxconv(BoxVariant::line, f, g).order() == 3);
    CHECK(boxconv(BoxVariant::red, f, g).order() == 4);
    CHECK(boxconv(BoxVariant::redred, f, g).order() == 2);
    CHECK_THROWS_AS(boxconv(BoxVariant::box, f, random_series(rng, 1, 3, 2)), DomainError);
}

TEST_CASE("S-transform examples")
{
    Rng rng(23);
    SUBCASE("constant F")
    {
        const Matrix c = rng.invertible_element(3, 2);
        const auto s = s_transform(left_I(TruncSeries::constant(c, 3)));
        CHECK(agree(s, TruncSeries::constant(*inverse(c), 2)));
        CHECK(agree(s_prime(left_I(TruncSeries::constant(c, 3))), s));
    }
    SUBCASE("scalar 1 + alpha x")
    {
        const Rational alpha(3, 2);
        auto big_f = TruncSeries::one(1, 2);
        big_f[1] = MultiMap::identity(1);
        big_f[1] *= alpha;
        const auto s = s_transform(left_I(big_f));
        CHECK(s[0][0] == Matrix::identity(1));
        CHECK(s[1].eval(std::vector<Matrix>{Matrix::identity(1)}) == -alpha * Matrix::identity(1));
    }
    SUBCASE("both routes agree")
    {
        for (int trial = 0; trial < 5; ++trial) {
            const auto f = random_gi(rng, 2, 4, 2);
            CHECK(agree(s_transform_by_inverse(f), s_transform_by_fixed_point(f)));
            CHECK(in_ginv(s_transform(f)));
        }
    }
    SUBCASE("class violation")
    {
        CHECK_THROWS_AS(s_transform(random_series(rng, 2, 3, 2)), DomainError);
        CHECK_THROWS_AS(u_transform(TruncSeries::identity(2, 3) + TruncSeries::one(2, 3)), DomainError);
    }
}

TEST_CASE("U-transform expressions")
{
    Rng rng(24);
    CHECK(agree(u_transform(TruncSeries::identity(2, 4)), TruncSeries::identity(2, 4)));
    for (int trial = 0; trial < 5; ++trial) {
        const auto f = random_gi(rng, 2, 4, 2);
        const auto u = u_transform(f);
        CHECK(in_gdif(u));
        CHECK(agree(u, u_transform_by_s(f)));
        CHECK(agree(u, u_transform_by_inverse(f)));
        const auto f1 = random_gi(rng, 1, 4, 2);
        CHECK(agree(u_transform(f1), TruncSeries::identity(1, 4)));
        CHECK(agree(s_prime(f1), s_transform(f1)));
    }
}

TEST_CASE("boxed convolution of G^I series")
{
    Rng rng(25);
    for (int trial = 0; trial < 5; ++trial) {
        const auto f = random_gi(rng, 2, 4, 2);
        const auto g = random_gi(rng, 2, 4, 2);
        CHECK(in_gi(boxconv(BoxVariant::box, f, g)));
        CHECK(in_gi(boxconv(BoxVariant::red, f, g)));
        CHECK(in_ginv(boxconv(BoxVariant::redred, f, g)));
        CHECK(in_gdif(boxconv(BoxVariant::line, f, g)));
    }
}

TEST_CASE("product factorization needs left absorption")
{
    const auto w = factorization_counterexample(2, 3);
    CHECK_FALSE(in_I_mult(w.g));
    const auto box = boxconv(BoxVariant::box, w.f, w.g);
    const auto red = boxconv(BoxVariant::red, w.f, w.g);
    const auto redred = boxconv(BoxVariant::redred, w.f, w.g);
    CHECK_FALSE(agree(box, mul(red, redred)));
    CHECK(agree(box, compose(w.g, red)));
    CHECK_THROWS_AS(factorization_counterexample(1, 3), DomainError);
}

TEST_CASE("transform verifiers pass at small size")
{
    for (std::size_t d : {1u, 2u}) {
        const Report r = verify_transform_identities(3, d, 3, 31);
        for (const auto& c : r.checks) {
            INFO(c.id);
            CHECK(c.pass);
            CHECK(c.witness.has_value() == !c.pass);
        }
    }
    CHECK(verify_transform_identities(3, 2, 1, 4).to_json(false) ==
          verify_transform_identities(3, 2, 1, 4).to_json(false));
}
