#include "freeconv/treeeval.hpp"

#include <vector>

#include "freeconv/error.hpp"

namespace freeconv {

namespace {

const MultiMap& degree(const TruncSeries& f, std::size_t k)
{
    if (k > f.order())
        throw DomainError("tree evaluation needs degree " + std::to_string(k) + " but the series has order " +
                          std::to_string(f.order()));
    return f[k];
}

// pick(depth) chooses the series at each nesting level.
Matrix eval_rec(const std::function<const TruncSeries&(std::size_t)>& pick, const Tree& t,
                std::span<const Matrix> args, std::size_t depth, std::size_t dim)
{
    if (t.is_leaf())
        return Matrix::identity(dim);
    const auto parts = comb_decompose(t);
    std::vector<Matrix> inner;
    inner.reserve(parts.size());
    std::size_t pos = 0;
    for (const auto& p : parts) {
        const std::size_t s = p.size();
        inner.push_back(eval_rec(pick, p, args.subspan(pos, s), depth + 1, dim) * args[pos + s]);
        pos += s + 1;
    }
    return degree(pick(depth), parts.size()).eval(inner);
}

void check_args(const Tree& t, std::span<const Matrix> args, std::size_t dim)
{
    if (args.size() != t.size())
        throw DomainError("tree evaluation: tree has " + std::to_string(t.size()) + " vertices but " +
                          std::to_string(args.size()) + " arguments were given");
    for (const auto& a : args)
        if (a.dim() != dim)
            throw DomainError("tree evaluation: argument dimension mismatch");
}

} // namespace

Matrix tree_eval(const TruncSeries& f, const Tree& t, std::span<const Matrix> args)
{
    check_args(t, args, f.dim());
    return eval_rec([&](std::size_t) -> const TruncSeries& { return f; }, t, args, 0, f.dim());
}

Matrix alt_tree_eval(const TruncSeries& f, const TruncSeries& g, const Tree& t, std::span<const Matrix> args)
{
    if (f.dim() != g.dim())
        throw DomainError("alt_tree_eval: dimensions differ");
    check_args(t, args, f.dim());
    return eval_rec([&](std::size_t depth) -> const TruncSeries& { return depth % 2 == 0 ? g : f; }, t, args, 0,
                    f.dim());
}

TreeTensorEvaluator::TreeTensorEvaluator(std::size_t dim, FreeSlots slots, SeriesSelector selector)
    : dim_(dim), slots_(slots), selector_(std::move(selector))
{
}

bool TreeTensorEvaluator::is_free(std::size_t position) const
{
    switch (slots_) {
    case FreeSlots::all:
        return true;
    case FreeSlots::odd:
        return position % 2 == 1;
    case FreeSlots::even:
        return position % 2 == 0;
    }
    return false;
}

std::size_t TreeTensorEvaluator::free_count(std::size_t offset, std::size_t size) const
{
    std::size_t n = 0;
    for (std::size_t p = offset + 1; p <= offset + size; ++p)
        n += is_free(p) ? 1 : 0;
    return n;
}

const MultiMap& TreeTensorEvaluator::eval(const Tree& t, std::size_t offset, std::size_t depth)
{
    Key key{t, static_cast<unsigned>((offset % 2) * 2 + depth % 2)};
    if (auto it = memo_.find(key); it != memo_.end())
        return it->second;

    MultiMap result;
    if (t.is_leaf()) {
        result = MultiMap::constant(Matrix::identity(dim_));
    } else {
        const auto parts = comb_decompose(t);
        std::vector<std::size_t> spine;
        std::vector<std::size_t> starts;
        std::size_t pos = offset;
        for (const auto& p : parts) {
            starts.push_back(pos);
            pos += p.size() + 1;
            spine.push_back(pos);
        }
        const TruncSeries* s = selector_(depth, spine);
        const MultiMap zero(dim_, free_count(offset, t.size()));
        result = zero;
        if (s) {
            const MultiMap& top = degree(*s, parts.size());
            std::vector<MultiMap> args;
            args.reserve(parts.size());
            bool vanished = top.is_zero();
            for (std::size_t i = 0; i < parts.size() && !vanished; ++i) {
                const MultiMap& sub = eval(parts[i], starts[i], depth + 1);
                if (sub.is_zero()) {
                    vanished = true;
                    break;
                }
                args.push_back(times(sub, is_free(spine[i]) ? MultiMap::identity(dim_)
                                                            : MultiMap::constant(Matrix::identity(dim_))));
            }
            if (!vanished)
                result = compose_slots(top, args);
        }
    }
    return memo_.emplace(std::move(key), std::move(result)).first->second;
}

MultiMap tree_tensor(const TruncSeries& f, const Tree& t)
{
    TreeTensorEvaluator ev(f.dim(), FreeSlots::all, [&f](std::size_t, std::span<const std::size_t>) { return &f; });
    return ev.eval(t);
}

SeriesSelector alternating_selector(const TruncSeries& f, const TruncSeries& g)
{
    return [&f, &g](std::size_t depth, std::span<const std::size_t>) { return depth % 2 == 0 ? &g : &f; };
}

MultiMap alt_tree_tensor(const TruncSeries& f, const TruncSeries& g, const Tree& t, FreeSlots slots)
{
    if (f.dim() != g.dim())
        throw DomainError("alt_tree_tensor: dimensions differ");
    TreeTensorEvaluator ev(f.dim(), slots, alternating_selector(f, g));
    return ev.eval(t);
}

} // namespace freeconv
