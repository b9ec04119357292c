#include "freeconv/multimap.hpp"

#include "freeconv/error.hpp"

namespace freeconv {

namespace {

std::size_t power(std::size_t base, std::size_t exp)
{
    std::size_t r = 1;
    for (std::size_t i = 0; i < exp; ++i)
        r *= base;
    return r;
}

void require_same_dim(const MultiMap& a, const MultiMap& b, const char* what)
{
    if (a.dim() != b.dim())
        throw DomainError(std::string(what) + ": algebra dimensions differ");
}

} // namespace

MultiMap::MultiMap(std::size_t dim, std::size_t arity)
    : dim_(dim), arity_(arity), values_(power(dim * dim, arity), Matrix(dim))
{
}

MultiMap MultiMap::constant(const Matrix& value)
{
    MultiMap m(value.dim(), 0);
    m.values_[0] = value;
    return m;
}

MultiMap MultiMap::identity(std::size_t dim)
{
    MultiMap m(dim, 1);
    for (std::size_t c = 0; c < m.size(); ++c)
        m.values_[c] = Matrix::basis(dim, c);
    return m;
}

const Matrix& MultiMap::at(std::span<const std::size_t> indices) const
{
    if (indices.size() != arity_)
        throw DomainError("MultiMap::at: wrong number of indices");
    std::size_t flat = 0;
    for (std::size_t i : indices)
        flat = flat * basis_size() + i;
    return values_[flat];
}

bool MultiMap::is_zero() const
{
    for (const auto& v : values_)
        if (!v.is_zero())
            return false;
    return true;
}

Matrix MultiMap::eval(std::span<const Matrix> args) const
{
    if (args.size() != arity_)
        throw DomainError("eval: expected " + std::to_string(arity_) + " arguments, got " +
                          std::to_string(args.size()));
    for (const auto& a : args)
        if (a.dim() != dim_)
            throw DomainError("eval: argument dimension mismatch");
    // Contract the last slot first.
    const std::size_t D = basis_size();
    std::vector<Matrix> cur = values_;
    for (std::size_t s = arity_; s-- > 0;) {
        std::vector<Matrix> next(cur.size() / D, Matrix(dim_));
        for (std::size_t p = 0; p < next.size(); ++p)
            for (std::size_t c = 0; c < D; ++c)
                if (sgn(args[s][c]) != 0)
                    next[p].add_scaled(args[s][c], cur[p * D + c]);
        cur = std::move(next);
    }
    return cur[0];
}

MultiMap& MultiMap::operator+=(const MultiMap& other)
{
    if (dim_ != other.dim_ || arity_ != other.arity_)
        throw DomainError("MultiMap +: shape mismatch");
    for (std::size_t i = 0; i < values_.size(); ++i)
        values_[i] += other.values_[i];
    return *this;
}

MultiMap& MultiMap::operator-=(const MultiMap& other)
{
    if (dim_ != other.dim_ || arity_ != other.arity_)
        throw DomainError("MultiMap -: shape mismatch");
    for (std::size_t i = 0; i < values_.size(); ++i)
        values_[i] -= other.values_[i];
    return *this;
}

MultiMap& MultiMap::operator*=(const Rational& c)
{
    for (auto& v : values_)
        v *= c;
    return *this;
}

bool operator==(const MultiMap& a, const MultiMap& b)
{
    return a.dim_ == b.dim_ && a.arity_ == b.arity_ && a.values_ == b.values_;
}

MultiMap times(const MultiMap& a, const MultiMap& b)
{
    require_same_dim(a, b, "times");
    MultiMap out(a.dim(), a.arity() + b.arity());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            multiply_into(a[i], b[j], out[i * b.size() + j]);
    }
    return out;
}

MultiMap contract_slot(const MultiMap& t, std::size_t pos, const MultiMap& g)
{
    require_same_dim(t, g, "contract_slot");
    if (pos >= t.arity())
        throw DomainError("contract_slot: slot out of range");
    const std::size_t D = t.basis_size();
    const std::size_t pre = power(D, pos);
    const std::size_t post = power(D, t.arity() - pos - 1);
    const std::size_t J = g.size();
    MultiMap out(t.dim(), t.arity() - 1 + g.arity());
    for (std::size_t j = 0; j < J; ++j)
        for (std::size_t c = 0; c < D; ++c) {
            const Rational& coef = g[j][c];
            if (sgn(coef) == 0)
                continue;
            for (std::size_t p = 0; p < pre; ++p)
                for (std::size_t q = 0; q < post; ++q)
                    out[(p * J + j) * post + q].add_scaled(coef, t[(p * D + c) * post + q]);
        }
    return out;
}

MultiMap fix_slot(const MultiMap& t, std::size_t pos, const Matrix& value)
{
    return contract_slot(t, pos, MultiMap::constant(value));
}

MultiMap compose_slots(const MultiMap& f, std::span<const MultiMap> gs)
{
    if (gs.size() != f.arity())
        throw DomainError("compose_slots: expected " + std::to_string(f.arity()) + " inner maps");
    MultiMap out = f;
    for (std::size_t i = gs.size(); i-- > 0;)
        out = contract_slot(out, i, gs[i]);
    return out;
}

MultiMap left_multiply(const Matrix& b, const MultiMap& t)
{
    MultiMap out(t.dim(), t.arity());
    for (std::size_t i = 0; i < t.size(); ++i)
        multiply_into(b, t[i], out[i]);
    return out;
}

MultiMap right_multiply(const MultiMap& t, const Matrix& b)
{
    MultiMap out(t.dim(), t.arity());
    for (std::size_t i = 0; i < t.size(); ++i)
        multiply_into(t[i], b, out[i]);
    return out;
}

MultiMap apply_linmap(const LinMap& l, const MultiMap& t)
{
    MultiMap out(t.dim(), t.arity());
    for (std::size_t i = 0; i < t.size(); ++i)
        out[i] = l.apply(t[i]);
    return out;
}

LinMap to_linmap(const MultiMap& t)
{
    if (t.arity() != 1)
        throw DomainError("to_linmap: degree-1 map expected");
    const std::size_t D = t.basis_size();
    Matrix m(D);
    for (std::size_t c = 0; c < D; ++c)
        for (std::size_t r = 0; r < D; ++r)
            m(r, c) = t[c][r];
    return LinMap(m);
}

MultiMap from_linmap(const LinMap& l)
{
    MultiMap out(l.algebra_dim(), 1);
    for (std::size_t c = 0; c < out.size(); ++c)
        out[c] = l.apply(Matrix::basis(l.algebra_dim(), c));
    return out;
}

} // namespace freeconv
