#include "freeconv/operad.hpp"

#include "freeconv/error.hpp"

namespace freeconv {

namespace {

const std::vector<Rational> kEmpty;

bool all_zero(const std::vector<Rational>& v)
{
    for (const auto& q : v)
        if (sgn(q) != 0)
            return false;
    return true;
}

} // namespace

TensorElement TensorElement::word(const Matrix& x)
{
    TensorElement t(x.dim());
    t.component_mut(1).assign(x.entries().begin(), x.entries().end());
    return t;
}

const std::vector<Rational>& TensorElement::component(std::size_t m) const
{
    if (m == 0 || m > parts_.size())
        return kEmpty;
    return parts_[m - 1];
}

std::vector<Rational>& TensorElement::component_mut(std::size_t m)
{
    if (m == 0)
        throw DomainError("T(B) has no length-0 component");
    if (parts_.size() < m)
        parts_.resize(m);
    auto& c = parts_[m - 1];
    if (c.empty()) {
        std::size_t size = 1;
        for (std::size_t i = 0; i < m; ++i)
            size *= dim_ * dim_;
        c.assign(size, Rational(0));
    }
    return c;
}

TensorElement& TensorElement::operator+=(const TensorElement& other)
{
    if (dim_ != other.dim_)
        throw DomainError("T(B) +: dimensions differ");
    for (std::size_t m = 1; m <= other.parts_.size(); ++m) {
        const auto& src = other.parts_[m - 1];
        if (src.empty())
            continue;
        auto& dst = component_mut(m);
        for (std::size_t i = 0; i < src.size(); ++i)
            dst[i] += src[i];
    }
    return *this;
}

bool operator==(const TensorElement& a, const TensorElement& b)
{
    if (a.dim_ != b.dim_)
        return false;
    const std::size_t top = std::max(a.parts_.size(), b.parts_.size());
    for (std::size_t m = 1; m <= top; ++m) {
        const auto& x = a.component(m);
        const auto& y = b.component(m);
        if (x.empty() || y.empty()) {
            if (!all_zero(x) || !all_zero(y))
                return false;
        } else if (x != y) {
            return false;
        }
    }
    return true;
}

TensorElement tensor(const TensorElement& u, const TensorElement& v)
{
    if (u.dim_ != v.dim_)
        throw DomainError("tensor: dimensions differ");
    TensorElement out(u.dim_);
    for (std::size_t p = 1; p <= u.parts_.size(); ++p) {
        const auto& a = u.parts_[p - 1];
        if (a.empty())
            continue;
        for (std::size_t q = 1; q <= v.parts_.size(); ++q) {
            const auto& b = v.parts_[q - 1];
            if (b.empty())
                continue;
            auto& dst = out.component_mut(p + q);
            for (std::size_t i = 0; i < a.size(); ++i) {
                if (sgn(a[i]) == 0)
                    continue;
                for (std::size_t j = 0; j < b.size(); ++j)
                    dst[i * b.size() + j] += a[i] * b[j];
            }
        }
    }
    return out;
}

TensorElement left_act(const Matrix& b, const TensorElement& u)
{
    if (b.dim() != u.dim_)
        throw DomainError("left_act: dimensions differ");
    const LinMap l = LinMap::left_multiplication(b);
    const std::size_t D = u.dim_ * u.dim_;
    TensorElement out(u.dim_);
    for (std::size_t m = 1; m <= u.parts_.size(); ++m) {
        const auto& a = u.parts_[m - 1];
        if (a.empty())
            continue;
        auto& dst = out.component_mut(m);
        const std::size_t rest = a.size() / D;
        for (std::size_t r = 0; r < D; ++r)
            for (std::size_t c = 0; c < D; ++c) {
                const Rational& coef = l.matrix()(r, c);
                if (sgn(coef) == 0)
                    continue;
                for (std::size_t q = 0; q < rest; ++q)
                    dst[r * rest + q] += coef * a[c * rest + q];
            }
    }
    return out;
}

Matrix apply_series(const TruncSeries& f, const TensorElement& u)
{
    if (f.dim() != u.dim())
        throw DomainError("apply_series: dimensions differ");
    Matrix out(f.dim());
    for (std::size_t m = 1; m <= u.max_length(); ++m) {
        const auto& a = u.component(m);
        if (a.empty() || all_zero(a))
            continue;
        if (m > f.order())
            throw DomainError("apply_series: word length exceeds the series order");
        for (std::size_t i = 0; i < a.size(); ++i)
            if (sgn(a[i]) != 0)
                out.add_scaled(a[i], f[m][i]);
    }
    return out;
}

TensorElement phi_word(const TruncSeries& f, const Tree& t, std::span<const Matrix> args)
{
    if (t.is_leaf())
        throw DomainError("phi_word: the leaf has no word");
    if (args.size() != t.size())
        throw DomainError("phi_word: argument count does not match the tree");
    const std::size_t ls = t.left().size();
    const Matrix& root = args[ls];
    TensorElement head = t.left().is_leaf()
                             ? TensorElement::word(root)
                             : left_act(apply_series(f, phi_word(f, t.left(), args.first(ls))), TensorElement::word(root));
    if (t.right().is_leaf())
        return head;
    return tensor(head, phi_word(f, t.right(), args.subspan(ls + 1)));
}

Matrix operad_eval(const TruncSeries& f, const Tree& t, std::span<const Matrix> args)
{
    if (!in_I_mult(f))
        throw DomainError("operad_eval: series must lie in I.Mult[[B]]");
    if (args.size() != t.size())
        throw DomainError("operad_eval: argument count does not match the tree");
    if (t.is_leaf())
        return Matrix::identity(f.dim());
    return apply_series(f, phi_word(f, t, args));
}

TensorElement random_tensor_element(Rng& rng, std::size_t dim, std::size_t max_length, std::int64_t bound)
{
    TensorElement t(dim);
    for (std::size_t m = 1; m <= max_length; ++m) {
        TensorElement piece = TensorElement::word(rng.element(bound, dim));
        for (std::size_t k = 1; k < m; ++k)
            piece = tensor(piece, TensorElement::word(rng.element(bound, dim)));
        // Sums of two pure tensors are not pure in general.
        TensorElement other = TensorElement::word(rng.element(bound, dim));
        for (std::size_t k = 1; k < m; ++k)
            other = tensor(other, TensorElement::word(rng.element(bound, dim)));
        t += piece;
        t += other;
    }
    return t;
}

DuplicialCheck check_duplicial(const TruncSeries& f, const TensorElement& u, const TensorElement& v,
                               const TensorElement& w)
{
    const Matrix fu = apply_series(f, u);
    DuplicialCheck c;
    c.nested_action = left_act(apply_series(f, left_act(fu, v)), w) == left_act(fu, left_act(apply_series(f, v), w));
    c.associative = tensor(tensor(u, v), w) == tensor(u, tensor(v, w));
    c.mixed = tensor(left_act(fu, v), w) == left_act(fu, tensor(v, w));
    return c;
}

} // namespace freeconv
