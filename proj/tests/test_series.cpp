#include <doctest.h>

#include <vector>

#include "freeconv/error.hpp"
#include "freeconv/series.hpp"

using namespace freeconv;

namespace {

Matrix scalar(const Rational& q)
{
    Matrix m(1);
    m[0] = q;
    return m;
}

// d = 1 series with f_n(x_1..x_n) = c_n x_1...x_n.
TruncSeries scalar_series(const std::vector<Rational>& c)
{
    auto s = TruncSeries::zero(1, c.size() - 1);
    for (std::size_t n = 0; n < c.size(); ++n)
        s[n][0] = scalar(c[n]);
    return s;
}

Rational coeff(const TruncSeries& s, std::size_t n) { return s[n][0][0]; }

std::vector<Matrix> random_args(Rng& rng, std::size_t n, std::size_t d)
{
    std::vector<Matrix> xs;
    for (std::size_t i = 0; i < n; ++i)
        xs.push_back(rng.element(3, d));
    return xs;
}

} // namespace

TEST_CASE("eval on basis tuples returns the stored entry")
{
    Rng rng(1);
    auto f = random_series(rng, 2, 3, 3);
    CHECK(f[0].eval(std::vector<Matrix>{}) == f[0][0]);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            std::vector<Matrix> args{Matrix::basis(2, i), Matrix::basis(2, j)};
            CHECK(f[2].eval(args) == f[2][i * 4 + j]);
        }
    auto x = rng.element(3, 2);
    CHECK(MultiMap::identity(2).eval(std::vector<Matrix>{x}) == x);
    CHECK_THROWS_AS(f[2].eval(std::vector<Matrix>{x}), DomainError);
}

TEST_CASE("eval is multilinear")
{
    Rng rng(2);
    auto f = random_series(rng, 2, 3, 3);
    for (int t = 0; t < 10; ++t) {
        auto xs = random_args(rng, 3, 2);
        auto y = rng.element(3, 2);
        Rational c = rng.rational(4);
        auto ys = xs;
        ys[1] = y;
        auto zs = xs;
        zs[1] = xs[1] + c * y;
        CHECK(f[3].eval(zs) == f[3].eval(xs) + c * f[3].eval(ys));
    }
}

TEST_CASE("product units and low-degree formulas")
{
    Rng rng(3);
    auto f = random_series(rng, 2, 4, 3);
    auto g = random_series(rng, 2, 4, 3);
    auto one = TruncSeries::one(2, 4);
    CHECK(agree(mul(f, one), f));
    CHECK(agree(mul(one, f), f));
    CHECK(mul(f, g).order() == 4);

    auto fg = mul(f, g);
    for (int t = 0; t < 5; ++t) {
        auto x = rng.element(3, 2);
        std::vector<Matrix> a{x};
        CHECK(fg[1].eval(a) == f[0][0] * g[1].eval(a) + f[1].eval(a) * g[0][0]);
    }

    // (I.F)_2(x_1, x_2) = x_1 F_1(x_2)
    auto ifs = left_I(f);
    for (int t = 0; t < 5; ++t) {
        auto xs = random_args(rng, 2, 2);
        CHECK(ifs[2].eval(xs) == xs[0] * f[1].eval(std::vector<Matrix>{xs[1]}));
    }
}

TEST_CASE("product is associative")
{
    Rng rng(4);
    for (int t = 0; t < 5; ++t) {
        auto f = random_series(rng, 2, 3, 3), g = random_series(rng, 2, 3, 3), h = random_series(rng, 2, 3, 3);
        CHECK(agree(mul(mul(f, g), h), mul(f, mul(g, h))));
    }
}

TEST_CASE("composition units and right distributivity")
{
    Rng rng(5);
    auto id = TruncSeries::identity(2, 4);
    for (int t = 0; t < 20; ++t) {
        auto f = random_series(rng, 2, 4, 3);
        auto g = random_series(rng, 2, 4, 3);
        auto h = random_series(rng, 2, 4, 3);
        h[0] = MultiMap(2, 0);
        CHECK(agree(compose(f, id), f));
        CHECK(agree(compose(h, id), h));
        CHECK(agree(compose(id, h), h));
        auto lhs = compose(mul(f, g), h);
        auto rhs = mul(compose(f, h), compose(g, h));
        CHECK(common_order(lhs, rhs) == 4);
        CHECK(agree(lhs, rhs));
    }
    CHECK(agree(compose(TruncSeries::identity(1, 4), TruncSeries::identity(1, 4)), TruncSeries::identity(1, 4)));
    CHECK_THROWS_AS(compose(id, TruncSeries::one(2, 4)), DomainError);
}

TEST_CASE("composition is associative")
{
    Rng rng(6);
    for (int t = 0; t < 3; ++t) {
        auto f = random_series(rng, 2, 3, 3), g = random_series(rng, 2, 3, 3), h = random_series(rng, 2, 3, 3);
        g[0] = MultiMap(2, 0);
        h[0] = MultiMap(2, 0);
        CHECK(agree(compose(compose(f, g), h), compose(f, compose(g, h))));
    }
}

TEST_CASE("multiplicative inverse")
{
    Matrix c(2);
    c(0, 0) = 2;
    c(0, 1) = 1;
    c(1, 1) = 3;
    auto inv = mult_inverse(TruncSeries::constant(c, 3));
    CHECK(agree(inv, TruncSeries::constant(*inverse(c), 3)));

    // 1 + a x -> sum (-a)^n x^n
    Rational a(2, 3);
    auto g = mult_inverse(scalar_series({1, a, 0, 0, 0}));
    Rational p = 1;
    for (std::size_t n = 0; n <= 4; ++n) {
        CHECK(coeff(g, n) == p);
        p *= -a;
    }

    Rng rng(7);
    for (int t = 0; t < 10; ++t) {
        auto f = random_ginv(rng, 2, 4, 3);
        auto fi = mult_inverse(f);
        CHECK(agree(mul(f, fi), TruncSeries::one(2, 4)));
        CHECK(agree(mul(fi, f), TruncSeries::one(2, 4)));
        CHECK(agree(mult_inverse(fi), f));
    }
    CHECK_THROWS_AS(mult_inverse(TruncSeries::zero(2, 2)), DomainError);
}

TEST_CASE("compositional inverse")
{
    CHECK(agree(comp_inverse(TruncSeries::identity(2, 4)), TruncSeries::identity(2, 4)));

    // f = I.(1 + a x): f^{-1}_2 = -a x_1 x_2
    Rational a(5, 2);
    auto f = left_I(scalar_series({1, a, 0}));
    auto fi = comp_inverse(f);
    CHECK(coeff(fi, 1) == 1);
    CHECK(coeff(fi, 2) == -a);
    CHECK(coeff(fi, 3) == 2 * a * a);

    Rng rng(8);
    for (int t = 0; t < 10; ++t) {
        auto g = random_series(rng, 2, 4, 3);
        g[0] = MultiMap(2, 0);
        g[1] = from_linmap(LinMap::left_multiplication(rng.invertible_element(3, 2)) *
                           LinMap::right_multiplication(rng.invertible_element(3, 2)));
        auto gi = comp_inverse(g);
        CHECK(agree(compose(g, gi), TruncSeries::identity(2, 4)));
        CHECK(agree(compose(gi, g), TruncSeries::identity(2, 4)));
    }
    CHECK_THROWS_AS(comp_inverse(TruncSeries::one(2, 3)), DomainError);
}

TEST_CASE("G^I is a group and equals I.G^inv")
{
    Rng rng(9);
    for (int t = 0; t < 10; ++t) {
        auto f = random_gi(rng, 2, 4, 3);
        auto g = random_gi(rng, 2, 4, 3);
        CHECK(in_gi(f));
        CHECK(in_gdif(f));
        CHECK(agree(left_I(strip_left_I(f)), f));
        auto fi = comp_inverse(f);
        CHECK(in_gi(fi));
        CHECK(in_gi(compose(f, g)));
        CHECK(fi.order() == 4);
    }
    // Absorption fails for a generic G^dif element.
    auto g = random_series(rng, 2, 3, 3);
    g[0] = MultiMap(2, 0);
    g[1] = MultiMap::identity(2);
    CHECK(in_gdif(g));
    CHECK_FALSE(in_gi(g));
    CHECK(in_gi(TruncSeries::identity(2, 3)));
    // f_1(1) must be invertible.
    auto h = left_I(TruncSeries::zero(2, 2));
    CHECK_FALSE(in_gi(h));
}

TEST_CASE("I strip helpers are inverse to the I products")
{
    Rng rng(10);
    auto f = random_series(rng, 2, 3, 3);
    CHECK(agree(strip_left_I(left_I(f)), f));
    CHECK(agree(strip_right_I(right_I(f)), f));
    CHECK(left_I(f).order() == 4);
}

TEST_CASE("series arithmetic truncates to the common order")
{
    Rng rng(11);
    auto f = random_series(rng, 2, 4, 3);
    auto g = random_series(rng, 2, 2, 3);
    CHECK((f + g).order() == 2);
    CHECK(agree((f + g) - g, f));
    CHECK(first_difference(f, f + TruncSeries::one(2, 4)) == std::optional<std::size_t>(0));
    CHECK_FALSE(first_difference(f, f).has_value());
}
