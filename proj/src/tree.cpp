#include "freeconv/tree.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <unordered_map>

#include "freeconv/error.hpp"

namespace freeconv {

namespace {

std::size_t mix(std::size_t a, std::size_t b)
{
    a ^= b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2);
    return a * 0xff51afd7ed558ccdULL;
}

} // namespace

Tree Tree::wedge(const Tree& left, const Tree& right)
{
    Tree t;
    t.node_ = std::make_shared<const Node>(
        Node{left, right, left.size() + right.size() + 1, mix(mix(left.hash(), 0x51), right.hash())});
    return t;
}

const Tree& Tree::left() const
{
    if (!node_)
        throw DomainError("leaf has no left subtree");
    return node_->left;
}

const Tree& Tree::right() const
{
    if (!node_)
        throw DomainError("leaf has no right subtree");
    return node_->right;
}

std::string Tree::str() const
{
    if (!node_)
        return "|";
    return "(" + node_->left.str() + "," + node_->right.str() + ")";
}

bool operator==(const Tree& a, const Tree& b)
{
    if (a.node_ == b.node_)
        return true;
    if (!a.node_ || !b.node_ || a.node_->size != b.node_->size || a.node_->hash != b.node_->hash)
        return false;
    return a.node_->left == b.node_->left && a.node_->right == b.node_->right;
}

bool operator<(const Tree& a, const Tree& b)
{
    if (a.node_ == b.node_)
        return false;
    if (a.size() != b.size())
        return a.size() < b.size();
    if (!a.node_)
        return false;
    if (!(a.node_->left == b.node_->left))
        return a.node_->left < b.node_->left;
    return a.node_->right < b.node_->right;
}

namespace {

Tree parse_at(std::string_view s, std::size_t& pos)
{
    while (pos < s.size() && s[pos] == ' ')
        ++pos;
    if (pos >= s.size())
        throw ParseError("unexpected end of tree text");
    if (s[pos] == '|') {
        ++pos;
        return Tree();
    }
    if (s[pos] != '(')
        throw ParseError("unexpected character in tree text at position " + std::to_string(pos));
    ++pos;
    Tree l = parse_at(s, pos);
    while (pos < s.size() && s[pos] == ' ')
        ++pos;
    if (pos >= s.size() || s[pos] != ',')
        throw ParseError("expected ',' in tree text at position " + std::to_string(pos));
    ++pos;
    Tree r = parse_at(s, pos);
    while (pos < s.size() && s[pos] == ' ')
        ++pos;
    if (pos >= s.size() || s[pos] != ')')
        throw ParseError("expected ')' in tree text at position " + std::to_string(pos));
    ++pos;
    return Tree::wedge(l, r);
}

} // namespace

Tree parse_tree(std::string_view text)
{
    std::size_t pos = 0;
    Tree t = parse_at(text, pos);
    while (pos < text.size() && text[pos] == ' ')
        ++pos;
    if (pos != text.size())
        throw ParseError("trailing characters in tree text");
    return t;
}

Tree dot() { return Tree::wedge(Tree(), Tree()); }

Tree right_comb(std::size_t n)
{
    Tree t;
    for (std::size_t i = 0; i < n; ++i)
        t = Tree::wedge(Tree(), t);
    return t;
}

Tree wedge(const Tree& left, const Tree& right) { return Tree::wedge(left, right); }

std::pair<Tree, Tree> unwedge(const Tree& t)
{
    if (t.is_leaf())
        throw DomainError("unwedge: the leaf has no decomposition");
    return {t.left(), t.right()};
}

Tree over(const Tree& sigma, const Tree& tau)
{
    if (tau.is_leaf())
        return sigma;
    return Tree::wedge(over(sigma, tau.left()), tau.right());
}

Tree under(const Tree& sigma, const Tree& tau)
{
    if (sigma.is_leaf())
        return tau;
    return Tree::wedge(sigma.left(), under(sigma.right(), tau));
}

Tree graft(GraftMode mode, const Tree& sigma, const Tree& tau)
{
    return mode == GraftMode::over ? over(sigma, tau) : under(sigma, tau);
}

namespace {

Tree substitute_range(const Tree& tau, const std::vector<Tree>& subs, std::size_t& next)
{
    if (tau.is_leaf())
        return Tree();
    Tree l = substitute_range(tau.left(), subs, next);
    const Tree& v = subs[next++];
    Tree r = substitute_range(tau.right(), subs, next);
    return under(over(l, v), r);
}

} // namespace

Tree substitute(const Tree& tau, const std::vector<Tree>& subs)
{
    if (tau.is_leaf())
        throw DomainError("substitute: target tree must have a vertex");
    if (subs.size() != tau.size())
        throw DomainError("substitute: arity mismatch, expected " + std::to_string(tau.size()) +
                          " trees, got " + std::to_string(subs.size()));
    for (const auto& s : subs)
        if (s.is_leaf())
            throw DomainError("substitute: substituted trees must have a vertex");
    std::size_t next = 0;
    return substitute_range(tau, subs, next);
}

std::vector<Tree> comb_decompose(const Tree& t)
{
    if (t.is_leaf())
        throw DomainError("comb_decompose: the leaf has no spine");
    std::vector<Tree> parts;
    for (const Tree* cur = &t; !cur->is_leaf(); cur = &cur->right())
        parts.push_back(cur->left());
    return parts;
}

Tree comb(const std::vector<Tree>& parts)
{
    Tree t;
    for (auto it = parts.rbegin(); it != parts.rend(); ++it)
        t = Tree::wedge(*it, t);
    return t;
}

Tree rotated_comb(const std::vector<Tree>& parts)
{
    if (parts.empty())
        throw DomainError("rotated_comb: needs at least one slot");
    Tree t;
    for (auto it = parts.rbegin(); it != parts.rend(); ++it)
        t = Tree::wedge(Tree::wedge(Tree(), *it), t);
    return t;
}

Tree rmap(const Tree& t)
{
    if (t.is_leaf())
        return Tree();
    return Tree::wedge(Tree::wedge(Tree(), rmap(t.left())), rmap(t.right()));
}

const std::vector<Tree>& enumerate_trees(std::size_t n)
{
    static std::mutex mu;
    static std::vector<std::unique_ptr<std::vector<Tree>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    while (cache.size() <= n) {
        std::size_t m = cache.size();
        auto level = std::make_unique<std::vector<Tree>>();
        if (m == 0) {
            level->push_back(Tree());
        } else {
            for (std::size_t k = 0; k < m; ++k)
                for (const auto& l : *cache[k])
                    for (const auto& r : *cache[m - 1 - k])
                        level->push_back(Tree::wedge(l, r));
        }
        cache.push_back(std::move(level));
    }
    return *cache[n];
}

const std::vector<Tree>& enumerate_yb(std::size_t n)
{
    static std::mutex mu;
    static std::map<std::size_t, std::vector<Tree>> cache;
    const auto& trees = enumerate_trees(n);
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) {
        std::vector<Tree> out;
        out.reserve(trees.size());
        for (const auto& t : trees)
            out.push_back(rmap(t));
        it = cache.emplace(n, std::move(out)).first;
    }
    return it->second;
}

namespace {

// Labels vertices in order; arm_of[label] is the arm id.
void collect_arms(const Tree& t, std::size_t& next_label, std::size_t arm,
                  std::vector<std::vector<std::size_t>>& arms)
{
    if (t.is_leaf())
        return;
    // A left child starts a new arm; a right child continues its parent's.
    if (!t.left().is_leaf()) {
        arms.emplace_back();
        collect_arms(t.left(), next_label, arms.size() - 1, arms);
    }
    arms[arm].push_back(++next_label);
    collect_arms(t.right(), next_label, arm, arms);
}

} // namespace

std::vector<std::vector<std::size_t>> right_arms(const Tree& t)
{
    std::vector<std::vector<std::size_t>> arms;
    if (t.is_leaf())
        return arms;
    arms.emplace_back();
    std::size_t next = 0;
    collect_arms(t, next, 0, arms);
    std::sort(arms.begin(), arms.end());
    return arms;
}

bool in_ybo(const Tree& t);

bool in_ybe(const Tree& t)
{
    if (t.is_leaf())
        return true;
    return in_ybo(t.left()) && in_ybe(t.right());
}

bool in_ybo(const Tree& t)
{
    if (t.is_leaf())
        return false;
    return in_ybe(t.left()) && in_ybe(t.right());
}

bool splits(const Tree& t)
{
    for (const auto& arm : right_arms(t))
        for (std::size_t v : arm)
            if (v % 2 != arm.front() % 2)
                return false;
    return true;
}

TreeParity classify(const Tree& t)
{
    TreeParity p;
    if (in_ybe(t))
        p.kind = Parity::BE;
    else if (in_ybo(t))
        p.kind = Parity::BO;
    if (p.kind != Parity::NONE)
        p.arms = right_arms(t);
    return p;
}

std::vector<Tree> enumerate_ybe(std::size_t two_n)
{
    std::vector<Tree> out;
    for (const auto& t : enumerate_trees(two_n))
        if (in_ybe(t))
            out.push_back(t);
    return out;
}

namespace {

void pi_product(const std::vector<const std::vector<Tree>*>& choices, std::size_t i,
                std::vector<Tree>& slots, const Tree& rho, std::vector<Tree>& out)
{
    if (i == choices.size()) {
        out.push_back(substitute(rho, slots));
        return;
    }
    for (const auto& s : *choices[i]) {
        slots[2 * i] = Tree::wedge(s, Tree());
        pi_product(choices, i + 1, slots, rho, out);
    }
}

} // namespace

const std::vector<Tree>& pi_set(const Tree& t)
{
    static std::recursive_mutex mu;
    static std::unordered_map<Tree, std::vector<Tree>, TreeHash> memo;
    std::lock_guard<std::recursive_mutex> lock(mu);
    auto it = memo.find(t);
    if (it != memo.end())
        return it->second;
    std::vector<Tree> out;
    if (t.is_leaf()) {
        out.push_back(Tree());
    } else {
        auto parts = comb_decompose(t);
        std::vector<const std::vector<Tree>*> choices;
        for (const auto& p : parts)
            choices.push_back(&pi_set(p));
        std::vector<Tree> slots(2 * parts.size(), dot());
        for (const auto& rho : enumerate_yb(parts.size()))
            pi_product(choices, 0, slots, rho, out);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
    }
    return memo.emplace(t, std::move(out)).first->second;
}

std::string to_string(Parity p)
{
    switch (p) {
    case Parity::BE:
        return "BE";
    case Parity::BO:
        return "BO";
    default:
        return "NONE";
    }
}

} // namespace freeconv
