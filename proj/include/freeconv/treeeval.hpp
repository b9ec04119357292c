#pragma once

// Tree-indexed evaluation of series.
//
// Vertices of a tree are numbered in left-to-right order. For
// t = comb(t_1, ..., t_k) with spine vertices j_1 < ... < j_k,
//   f_t(x) = f_k(f_{t_1}(x..)x_{j_1}, ..., f_{t_k}(x..)x_{j_k}),  f_| = 1,
// and (f u g)_t uses g_k at the top with (g u f) on the subtrees.

#include <cstddef>
#include <functional>
#include <span>
#include <unordered_map>

#include "freeconv/series.hpp"
#include "freeconv/tree.hpp"

namespace freeconv {

Matrix tree_eval(const TruncSeries& f, const Tree& t, std::span<const Matrix> args);
Matrix alt_tree_eval(const TruncSeries& f, const TruncSeries& g, const Tree& t, std::span<const Matrix> args);

// Which argument positions (1-based) are variables; the others hold 1.
enum class FreeSlots { all, odd, even };

// Series for the comb node at `depth` whose spine vertices sit at the given
// absolute positions; nullptr makes the node vanish. It may depend only on
// the parity of depth and of the positions.
using SeriesSelector =
    std::function<const TruncSeries*(std::size_t depth, std::span<const std::size_t> spine)>;

// The map x -> value of the tree with variables in the free slots, built as a
// dense tensor. Subtree tensors are memoized per evaluator.
class TreeTensorEvaluator {
public:
    TreeTensorEvaluator(std::size_t dim, FreeSlots slots, SeriesSelector selector);

    // offset = number of vertices to the left of t in the enclosing argument list.
    const MultiMap& eval(const Tree& t, std::size_t offset = 0, std::size_t depth = 0);

    std::size_t free_count(std::size_t offset, std::size_t size) const;

private:
    struct Key {
        Tree tree;
        unsigned parity;
        friend bool operator==(const Key& a, const Key& b) { return a.parity == b.parity && a.tree == b.tree; }
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept { return k.tree.hash() * 4 + k.parity; }
    };

    bool is_free(std::size_t position) const;

    std::size_t dim_;
    FreeSlots slots_;
    SeriesSelector selector_;
    std::unordered_map<Key, MultiMap, KeyHash> memo_;
};

// f_t as a map of |t| variables.
MultiMap tree_tensor(const TruncSeries& f, const Tree& t);
// (f u g)_t with units in the non-free slots.
MultiMap alt_tree_tensor(const TruncSeries& f, const TruncSeries& g, const Tree& t, FreeSlots slots);

// Selector for (f u g): g at even depth, f at odd depth.
SeriesSelector alternating_selector(const TruncSeries& f, const TruncSeries& g);

} // namespace freeconv
