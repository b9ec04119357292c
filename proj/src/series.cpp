#include "freeconv/series.hpp"

#include <algorithm>
#include <functional>

#include "freeconv/error.hpp"

namespace freeconv {

TruncSeries::TruncSeries(std::vector<MultiMap> maps) : maps_(std::move(maps))
{
    if (maps_.empty())
        throw DomainError("series needs at least the degree-0 map");
    dim_ = maps_[0].dim();
    for (std::size_t n = 0; n < maps_.size(); ++n)
        if (maps_[n].arity() != n || maps_[n].dim() != dim_)
            throw DomainError("series map of degree " + std::to_string(n) + " has the wrong shape");
}

TruncSeries TruncSeries::zero(std::size_t dim, std::size_t order)
{
    std::vector<MultiMap> maps;
    for (std::size_t n = 0; n <= order; ++n)
        maps.emplace_back(dim, n);
    return TruncSeries(std::move(maps));
}

TruncSeries TruncSeries::one(std::size_t dim, std::size_t order)
{
    return constant(Matrix::identity(dim), order);
}

TruncSeries TruncSeries::identity(std::size_t dim, std::size_t order)
{
    auto s = zero(dim, std::max<std::size_t>(order, 1));
    s.maps_[1] = MultiMap::identity(dim);
    return order == 0 ? s.truncated(0) : s;
}

TruncSeries TruncSeries::constant(const Matrix& c, std::size_t order)
{
    auto s = zero(c.dim(), order);
    s.maps_[0] = MultiMap::constant(c);
    return s;
}

TruncSeries TruncSeries::truncated(std::size_t order) const
{
    if (order > this->order())
        throw DomainError("cannot extend a series beyond its order");
    return TruncSeries(std::vector<MultiMap>(maps_.begin(), maps_.begin() + static_cast<std::ptrdiff_t>(order) + 1));
}

std::size_t TruncSeries::valuation() const
{
    for (std::size_t n = 0; n < maps_.size(); ++n)
        if (!maps_[n].is_zero())
            return n;
    return maps_.size();
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& other)
{
    if (dim_ != other.dim_)
        throw DomainError("series +: dimensions differ");
    maps_.resize(std::min(maps_.size(), other.maps_.size()));
    for (std::size_t n = 0; n < maps_.size(); ++n)
        maps_[n] += other.maps_[n];
    return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& other)
{
    if (dim_ != other.dim_)
        throw DomainError("series -: dimensions differ");
    maps_.resize(std::min(maps_.size(), other.maps_.size()));
    for (std::size_t n = 0; n < maps_.size(); ++n)
        maps_[n] -= other.maps_[n];
    return *this;
}

std::size_t common_order(const TruncSeries& f, const TruncSeries& g) { return std::min(f.order(), g.order()); }

std::optional<std::size_t> first_difference(const TruncSeries& f, const TruncSeries& g)
{
    if (f.dim() != g.dim())
        return 0;
    for (std::size_t n = 0; n <= common_order(f, g); ++n)
        if (!(f[n] == g[n]))
            return n;
    return std::nullopt;
}

bool agree(const TruncSeries& f, const TruncSeries& g) { return !first_difference(f, g); }

namespace {

void require_same_dim(const TruncSeries& f, const TruncSeries& g, const char* what)
{
    if (f.dim() != g.dim())
        throw DomainError(std::string(what) + ": algebra dimensions differ");
}

// Calls visit(parts) for every composition of n into parts in [lo, hi],
// with at most max_parts parts.
void for_each_composition(std::size_t n, std::size_t lo, std::size_t hi, std::size_t max_parts,
                          const std::function<void(const std::vector<std::size_t>&)>& visit)
{
    std::vector<std::size_t> parts;
    std::function<void(std::size_t)> rec = [&](std::size_t left) {
        if (left == 0) {
            visit(parts);
            return;
        }
        if (parts.size() == max_parts)
            return;
        for (std::size_t k = lo; k <= std::min(hi, left); ++k) {
            parts.push_back(k);
            rec(left - k);
            parts.pop_back();
        }
    };
    if (lo == 0)
        throw DomainError("compositions need positive parts");
    rec(n);
}

// Sum over compositions (k_1..k_l) of n, l in [min_parts, f.order()],
// of f_l(g_{k_1}, ..., g_{k_l}).
MultiMap composition_sum(const TruncSeries& f, const TruncSeries& g, std::size_t n, std::size_t min_parts,
                         std::size_t max_part)
{
    MultiMap acc(f.dim(), n);
    const std::size_t lo = std::max<std::size_t>(g.valuation(), 1);
    for_each_composition(n, lo, max_part, f.order(), [&](const std::vector<std::size_t>& parts) {
        if (parts.size() < min_parts)
            return;
        const MultiMap& outer = f[parts.size()];
        if (outer.is_zero())
            return;
        std::vector<MultiMap> inner;
        inner.reserve(parts.size());
        for (std::size_t k : parts) {
            if (g[k].is_zero())
                return;
            inner.push_back(g[k]);
        }
        acc += compose_slots(outer, inner);
    });
    return acc;
}

} // namespace

TruncSeries mul(const TruncSeries& f, const TruncSeries& g)
{
    require_same_dim(f, g, "mul");
    const std::size_t vf = f.valuation(), vg = g.valuation();
    const std::size_t order =
        std::min({f.order() + vg, g.order() + vf, std::max(f.order(), g.order())});
    std::vector<MultiMap> maps;
    for (std::size_t n = 0; n <= order; ++n) {
        MultiMap acc(f.dim(), n);
        for (std::size_t k = vf; k <= n && k <= f.order(); ++k) {
            if (n - k < vg)
                break;
            if (f[k].is_zero() || g[n - k].is_zero())
                continue;
            acc += times(f[k], g[n - k]);
        }
        maps.push_back(std::move(acc));
    }
    return TruncSeries(std::move(maps));
}

TruncSeries compose(const TruncSeries& f, const TruncSeries& g)
{
    require_same_dim(f, g, "compose");
    if (!g[0].is_zero())
        throw DomainError("compose: inner series must have zero constant term");
    const std::size_t vg = g.valuation();
    const std::size_t order = std::min(g.order(), (f.order() + 1) * vg - 1);
    std::vector<MultiMap> maps{f[0]};
    for (std::size_t n = 1; n <= order; ++n)
        maps.push_back(composition_sum(f, g, n, 1, g.order()));
    return TruncSeries(std::move(maps));
}

TruncSeries mult_inverse(const TruncSeries& f)
{
    auto inv0 = inverse(f[0][0]);
    if (!inv0)
        throw DomainError("mult_inverse: constant term is not invertible");
    std::vector<MultiMap> h{MultiMap::constant(*inv0)};
    for (std::size_t n = 1; n <= f.order(); ++n) {
        MultiMap acc(f.dim(), n);
        for (std::size_t k = 1; k <= n; ++k)
            if (!f[k].is_zero() && !h[n - k].is_zero())
                acc += times(f[k], h[n - k]);
        h.push_back(-left_multiply(*inv0, acc));
    }
    return TruncSeries(std::move(h));
}

TruncSeries comp_inverse(const TruncSeries& f)
{
    if (!in_gdif(f))
        throw DomainError("comp_inverse: series is not in G^dif");
    const LinMap l_inv = *inverse(to_linmap(f[1]));
    auto g = TruncSeries::zero(f.dim(), f.order());
    g[1] = from_linmap(l_inv);
    // f_1(g_n) = -sum over compositions with at least two parts, all < n.
    for (std::size_t n = 2; n <= f.order(); ++n)
        g[n] = -apply_linmap(l_inv, composition_sum(f, g, n, 2, n - 1));
    return g;
}

TruncSeries left_I(const TruncSeries& f)
{
    std::vector<MultiMap> maps{MultiMap(f.dim(), 0)};
    const auto id = MultiMap::identity(f.dim());
    for (std::size_t n = 0; n <= f.order(); ++n)
        maps.push_back(times(id, f[n]));
    return TruncSeries(std::move(maps));
}

TruncSeries right_I(const TruncSeries& f)
{
    std::vector<MultiMap> maps{MultiMap(f.dim(), 0)};
    const auto id = MultiMap::identity(f.dim());
    for (std::size_t n = 0; n <= f.order(); ++n)
        maps.push_back(times(f[n], id));
    return TruncSeries(std::move(maps));
}

TruncSeries strip_left_I(const TruncSeries& f)
{
    if (f.order() == 0)
        throw DomainError("strip_left_I: series of order 0 carries no information");
    std::vector<MultiMap> maps;
    const auto one = Matrix::identity(f.dim());
    for (std::size_t n = 1; n <= f.order(); ++n)
        maps.push_back(fix_slot(f[n], 0, one));
    return TruncSeries(std::move(maps));
}

TruncSeries strip_right_I(const TruncSeries& f)
{
    if (f.order() == 0)
        throw DomainError("strip_right_I: series of order 0 carries no information");
    std::vector<MultiMap> maps;
    const auto one = Matrix::identity(f.dim());
    for (std::size_t n = 1; n <= f.order(); ++n)
        maps.push_back(fix_slot(f[n], n - 1, one));
    return TruncSeries(std::move(maps));
}

bool in_ginv(const TruncSeries& f) { return inverse(f[0][0]).has_value(); }

bool in_gdif(const TruncSeries& f)
{
    if (f.order() < 1 || !f[0].is_zero())
        return false;
    return inverse(to_linmap(f[1])).has_value();
}

bool in_I_mult(const TruncSeries& f)
{
    if (!f[0].is_zero())
        return false;
    const auto id = MultiMap::identity(f.dim());
    const auto one = Matrix::identity(f.dim());
    for (std::size_t n = 1; n <= f.order(); ++n)
        if (!(f[n] == times(id, fix_slot(f[n], 0, one))))
            return false;
    return true;
}

bool in_gi(const TruncSeries& f)
{
    if (f.order() < 1 || !f[0].is_zero())
        return false;
    if (!inverse(f[1].eval(std::vector<Matrix>{Matrix::identity(f.dim())})))
        return false;
    return in_I_mult(f);
}

TruncSeries random_series(Rng& rng, std::size_t dim, std::size_t order, std::int64_t bound)
{
    auto s = TruncSeries::zero(dim, order);
    for (std::size_t n = 0; n <= order; ++n)
        for (std::size_t i = 0; i < s[n].size(); ++i)
            s[n][i] = rng.element(bound, dim);
    return s;
}

TruncSeries random_ginv(Rng& rng, std::size_t dim, std::size_t order, std::int64_t bound)
{
    auto s = random_series(rng, dim, order, bound);
    s[0][0] = rng.invertible_element(bound, dim);
    return s;
}

TruncSeries random_gi(Rng& rng, std::size_t dim, std::size_t order, std::int64_t bound)
{
    if (order == 0)
        throw DomainError("random_gi: order must be at least 1");
    return left_I(random_ginv(rng, dim, order - 1, bound));
}

} // namespace freeconv
