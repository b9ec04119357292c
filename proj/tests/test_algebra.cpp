#include <doctest.h>

#include "freeconv/algebra.hpp"
#include "freeconv/error.hpp"

using namespace freeconv;

namespace {

Matrix mat(std::size_t d, std::initializer_list<const char*> entries)
{
    Matrix m(d);
    std::size_t k = 0;
    for (const char* e : entries)
        m[k++] = parse_rational(e);
    return m;
}

} // namespace

TEST_CASE("rational parsing and formatting")
{
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational("-3") == Rational(-3));
    CHECK(format_rational(parse_rational("-6/4")) == "-3/2");
    CHECK(format_rational(Rational(5)) == "5");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("rational round trip")
{
    Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        Rational a = rng.rational(9), b = rng.rational(9);
        CHECK((a + b) - b == a);
    }
}

TEST_CASE("matrix inverse examples")
{
    CHECK(*inverse(Matrix::identity(3)) == Matrix::identity(3));
    CHECK(*inverse(mat(1, {"2/3"})) == mat(1, {"3/2"}));
    CHECK(*inverse(mat(2, {"1", "1", "0", "1"})) == mat(2, {"1", "-1", "0", "1"}));
    CHECK_FALSE(inverse(mat(2, {"1", "2", "2", "4"})).has_value());
    CHECK(determinant(mat(2, {"1", "2", "3", "4"})) == -2);
}

TEST_CASE("ring laws on random triples")
{
    Rng rng(11);
    const auto one = Matrix::identity(2);
    for (int i = 0; i < 50; ++i) {
        auto a = rng.element(5, 2), b = rng.element(5, 2), c = rng.element(5, 2);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * one == a);
        CHECK(one * a == a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) * c == a * c + b * c);
    }
}

TEST_CASE("inverse succeeds exactly when the determinant is nonzero")
{
    Rng rng(3);
    for (int i = 0; i < 200; ++i) {
        auto a = rng.element(1, 2);
        auto inv = inverse(a);
        CHECK(inv.has_value() == (determinant(a) != 0));
        if (inv) {
            CHECK((a * *inv).is_identity());
            CHECK((*inv * a).is_identity());
        }
    }
}

TEST_CASE("linear maps")
{
    Rng rng(5);
    auto c = rng.invertible_element(4, 2);
    auto x = rng.element(4, 2);
    auto l = LinMap::left_multiplication(c);
    auto r = LinMap::right_multiplication(c);
    CHECK(l.apply(x) == c * x);
    CHECK(r.apply(x) == x * c);
    CHECK(*inverse(LinMap::identity(2)) == LinMap::identity(2));
    CHECK(*inverse(l) == LinMap::left_multiplication(*inverse(c)));
    CHECK((l * r).apply(x) == c * x * c);

    for (int i = 0; i < 20; ++i) {
        Matrix m(4);
        for (std::size_t k = 0; k < 16; ++k)
            m[k] = rng.rational(6);
        auto inv = inverse(LinMap(m));
        if (!inv)
            continue;
        CHECK(LinMap(m) * *inv == LinMap::identity(2));
    }
}

TEST_CASE("random elements are deterministic and bounded")
{
    CHECK(random_element(1, 1, 1) == random_element(1, 1, 1));
    auto e = random_element(1, 1, 1);
    CHECK((e[0] == -1 || e[0] == 0 || e[0] == 1));
    Rng rng(99);
    for (int i = 0; i < 1000; ++i) {
        auto m = rng.element(5, 2);
        for (const auto& q : m.entries()) {
            CHECK(abs(q.get_num()) <= 5);
            CHECK(q.get_den() <= 5);
        }
    }
}
