#include "freeconv/algebra.hpp"

#include <sstream>
#include <utility>

#include "freeconv/error.hpp"

namespace freeconv {

Rational parse_rational(std::string_view text)
{
    std::string s(text);
    auto slash = s.find('/');
    auto valid_int = [](const std::string& t) {
        if (t.empty())
            return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size())
            return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9')
                return false;
        return true;
    };
    if (slash == std::string::npos) {
        if (!valid_int(s))
            throw ParseError("not a rational: '" + s + "'");
        return Rational(mpz_class(s[0] == '+' ? s.substr(1) : s));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
        throw ParseError("not a rational: '" + s + "'");
    mpz_class d(den);
    if (d == 0)
        throw ParseError("zero denominator: '" + s + "'");
    Rational q(mpz_class(num[0] == '+' ? num.substr(1) : num), d);
    q.canonicalize();
    return q;
}

std::string format_rational(const Rational& q) { return q.get_str(); }

Matrix Matrix::identity(std::size_t dim)
{
    Matrix m(dim);
    for (std::size_t i = 0; i < dim; ++i)
        m(i, i) = 1;
    return m;
}

Matrix Matrix::unit(std::size_t dim, std::size_t p, std::size_t q)
{
    Matrix m(dim);
    m(p, q) = 1;
    return m;
}

Matrix Matrix::basis(std::size_t dim, std::size_t index)
{
    Matrix m(dim);
    m[index] = 1;
    return m;
}

bool Matrix::is_zero() const
{
    for (const auto& e : entries_)
        if (sgn(e) != 0)
            return false;
    return true;
}

bool Matrix::is_identity() const
{
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            if ((*this)(i, j) != (i == j ? 1 : 0))
                return false;
    return true;
}

void Matrix::add_scaled(const Rational& c, const Matrix& m)
{
    if (sgn(c) == 0)
        return;
    Rational t;
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        if (sgn(m.entries_[k]) == 0)
            continue;
        mpq_mul(t.get_mpq_t(), c.get_mpq_t(), m.entries_[k].get_mpq_t());
        entries_[k] += t;
    }
}

Matrix& Matrix::operator+=(const Matrix& other)
{
    for (std::size_t k = 0; k < entries_.size(); ++k)
        entries_[k] += other.entries_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& other)
{
    for (std::size_t k = 0; k < entries_.size(); ++k)
        entries_[k] -= other.entries_[k];
    return *this;
}

Matrix& Matrix::operator*=(const Rational& c)
{
    for (auto& e : entries_)
        e *= c;
    return *this;
}

Matrix operator-(Matrix a)
{
    for (auto& e : a.entries_)
        e = -e;
    return a;
}

void multiply_into(const Matrix& a, const Matrix& b, Matrix& out)
{
    const std::size_t d = a.dim();
    Rational t;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Rational& acc = out(i, j);
            acc = 0;
            for (std::size_t k = 0; k < d; ++k) {
                if (sgn(a(i, k)) == 0 || sgn(b(k, j)) == 0)
                    continue;
                mpq_mul(t.get_mpq_t(), a(i, k).get_mpq_t(), b(k, j).get_mpq_t());
                acc += t;
            }
        }
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    Matrix out(a.dim());
    multiply_into(a, b, out);
    return out;
}

bool operator==(const Matrix& a, const Matrix& b)
{
    return a.dim_ == b.dim_ && a.entries_ == b.entries_;
}

std::string Matrix::str() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < dim_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < dim_; ++j)
            os << (j ? ", " : "") << (*this)(i, j).get_str();
        os << ']';
    }
    os << ']';
    return os.str();
}

namespace {

// Row-reduces a copy of `a`, applying the same operations to `rhs` when given.
// Returns the determinant (zero when singular, in which case rhs is garbage).
Rational gauss_jordan(Matrix a, Matrix* rhs)
{
    const std::size_t n = a.dim();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && sgn(a(pivot, col)) == 0)
            ++pivot;
        if (pivot == n)
            return 0;
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(pivot, j), a(col, j));
                if (rhs)
                    std::swap((*rhs)(pivot, j), (*rhs)(col, j));
            }
            det = -det;
        }
        Rational p = a(col, col);
        det *= p;
        Rational inv = 1 / p;
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) *= inv;
            if (rhs)
                (*rhs)(col, j) *= inv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || sgn(a(i, col)) == 0)
                continue;
            Rational factor = a(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= factor * a(col, j);
                if (rhs)
                    (*rhs)(i, j) -= factor * (*rhs)(col, j);
            }
        }
    }
    return det;
}

} // namespace

Rational determinant(const Matrix& a) { return gauss_jordan(a, nullptr); }

std::optional<Matrix> inverse(const Matrix& a)
{
    Matrix rhs = Matrix::identity(a.dim());
    if (sgn(gauss_jordan(a, &rhs)) == 0)
        return std::nullopt;
    return rhs;
}

LinMap::LinMap(Matrix m) : m_(std::move(m))
{
    std::size_t d = 0;
    while (d * d < m_.dim())
        ++d;
    if (d * d != m_.dim())
        throw DomainError("linear map matrix size must be a square d^2");
    algebra_dim_ = d;
}

LinMap LinMap::identity(std::size_t algebra_dim)
{
    return LinMap(Matrix::identity(algebra_dim * algebra_dim));
}

LinMap LinMap::left_multiplication(const Matrix& c)
{
    const std::size_t d = c.dim();
    Matrix m(d * d);
    // (c x)_{pq} = sum_r c_{pr} x_{rq}
    for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = 0; q < d; ++q)
            for (std::size_t r = 0; r < d; ++r)
                m(p * d + q, r * d + q) = c(p, r);
    return LinMap(std::move(m));
}

LinMap LinMap::right_multiplication(const Matrix& c)
{
    const std::size_t d = c.dim();
    Matrix m(d * d);
    // (x c)_{pq} = sum_r x_{pr} c_{rq}
    for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = 0; q < d; ++q)
            for (std::size_t r = 0; r < d; ++r)
                m(p * d + q, p * d + r) = c(r, q);
    return LinMap(std::move(m));
}

Matrix LinMap::apply(const Matrix& x) const
{
    if (x.dim() != algebra_dim_)
        throw DomainError("linear map applied to element of wrong dimension");
    Matrix out(algebra_dim_);
    const std::size_t b = m_.dim();
    for (std::size_t i = 0; i < b; ++i)
        for (std::size_t j = 0; j < b; ++j)
            if (sgn(m_(i, j)) != 0 && sgn(x[j]) != 0)
                out[i] += m_(i, j) * x[j];
    return out;
}

std::optional<LinMap> inverse(const LinMap& l)
{
    auto inv = inverse(l.matrix());
    if (!inv)
        return std::nullopt;
    return LinMap(std::move(*inv));
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi)
{
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
}

Rational Rng::rational(std::int64_t bound)
{
    if (bound < 1)
        throw DomainError("random bound must be >= 1");
    long num = static_cast<long>(uniform(-bound, bound));
    long den = static_cast<long>(uniform(1, bound));
    Rational q(num, static_cast<unsigned long>(den));
    q.canonicalize();
    return q;
}

Matrix Rng::element(std::int64_t bound, std::size_t dim)
{
    Matrix m(dim);
    for (std::size_t k = 0; k < dim * dim; ++k)
        m[k] = rational(bound);
    return m;
}

Matrix Rng::invertible_element(std::int64_t bound, std::size_t dim)
{
    for (;;) {
        Matrix m = element(bound, dim);
        if (sgn(determinant(m)) != 0)
            return m;
    }
}

Matrix random_element(std::uint64_t seed, std::int64_t bound, std::size_t dim)
{
    Rng rng(seed);
    return rng.element(bound, dim);
}

} // namespace freeconv
