#pragma once

// Planar binary trees. Vertices are numbered 1..n in left-to-right order
// (left subtree, root, right subtree); labels are never stored.

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace freeconv {

class Tree {
public:
    // Leaf.
    Tree() = default;

    static Tree leaf() { return Tree(); }
    static Tree wedge(const Tree& left, const Tree& right);

    bool is_leaf() const noexcept { return node_ == nullptr; }
    std::size_t size() const noexcept;
    std::size_t hash() const noexcept;

    // Precondition: !is_leaf().
    const Tree& left() const;
    const Tree& right() const;

    // "|" for a leaf, "(L,R)" for a wedge.
    std::string str() const;

    friend bool operator==(const Tree& a, const Tree& b);
    // Total order: size, then left subtree, then right subtree.
    friend bool operator<(const Tree& a, const Tree& b);

private:
    struct Node;
    std::shared_ptr<const Node> node_;
};

struct Tree::Node {
    Tree left;
    Tree right;
    std::size_t size;
    std::size_t hash;
};

inline std::size_t Tree::size() const noexcept { return node_ ? node_->size : 0; }
inline std::size_t Tree::hash() const noexcept { return node_ ? node_->hash : 0x9e3779b97f4a7c15ULL; }

struct TreeHash {
    std::size_t operator()(const Tree& t) const noexcept { return t.hash(); }
};

Tree parse_tree(std::string_view text);

// The one-vertex tree.
Tree dot();
// Right comb with n vertices: every left subtree is a leaf.
Tree right_comb(std::size_t n);

Tree wedge(const Tree& left, const Tree& right);
std::pair<Tree, Tree> unwedge(const Tree& t);

enum class GraftMode { over, under };

// over: sigma / tau grafts sigma as left child of tau's leftmost vertex.
// under: sigma \ tau grafts tau as right child of sigma's rightmost vertex.
Tree graft(GraftMode mode, const Tree& sigma, const Tree& tau);
Tree over(const Tree& sigma, const Tree& tau);
Tree under(const Tree& sigma, const Tree& tau);

// Operadic substitution: vertex i of tau is replaced by subs[i].
Tree substitute(const Tree& tau, const std::vector<Tree>& subs);

// The left subtrees hanging along the right spine, root first.
std::vector<Tree> comb_decompose(const Tree& t);
// Inverse of comb_decompose; comb({}) is the leaf.
Tree comb(const std::vector<Tree>& parts);

Tree rotated_comb(const std::vector<Tree>& parts);
Tree rmap(const Tree& t);

// All trees with n vertices, ordered by left-subtree size and then
// recursively. The returned reference stays valid for the process lifetime.
const std::vector<Tree>& enumerate_trees(std::size_t n);

// R(Y_n), in the order of enumerate_trees(n).
const std::vector<Tree>& enumerate_yb(std::size_t n);

// Right arms as lists of vertex labels (1-based). Every vertex lies on
// exactly one arm.
std::vector<std::vector<std::size_t>> right_arms(const Tree& t);

enum class Parity { BE, BO, NONE };

struct TreeParity {
    Parity kind = Parity::NONE;
    std::vector<std::vector<std::size_t>> arms;
};

bool in_ybe(const Tree& t);
bool in_ybo(const Tree& t);
// All right arms carry vertices of one parity.
bool splits(const Tree& t);
TreeParity classify(const Tree& t);

// Y^be with 2n vertices, in enumeration order.
std::vector<Tree> enumerate_ybe(std::size_t two_n);

// Sorted, duplicate free.
const std::vector<Tree>& pi_set(const Tree& t);

std::string to_string(Parity p);

} // namespace freeconv
