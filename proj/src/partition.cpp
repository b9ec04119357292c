#include "freeconv/partition.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include <json.hpp>

#include "freeconv/error.hpp"

namespace freeconv {

Partition Partition::from_labels(const std::vector<int>& labels)
{
    Partition p;
    p.labels_.resize(labels.size());
    std::map<int, int> remap;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        auto [it, inserted] = remap.emplace(labels[i], static_cast<int>(remap.size()));
        p.labels_[i] = it->second;
    }
    p.block_count_ = remap.size();
    return p;
}

Partition Partition::from_blocks(std::size_t n, const std::vector<std::vector<int>>& blocks)
{
    std::vector<int> labels(n, -1);
    int id = 0;
    for (const auto& b : blocks) {
        if (b.empty())
            throw DomainError("partition block must be nonempty");
        for (int e : b) {
            if (e < 1 || static_cast<std::size_t>(e) > n)
                throw DomainError("partition element " + std::to_string(e) + " outside [1," +
                                  std::to_string(n) + "]");
            if (labels[static_cast<std::size_t>(e - 1)] != -1)
                throw DomainError("partition element " + std::to_string(e) + " in two blocks");
            labels[static_cast<std::size_t>(e - 1)] = id;
        }
        ++id;
    }
    for (std::size_t i = 0; i < n; ++i)
        if (labels[i] == -1)
            throw DomainError("partition misses element " + std::to_string(i + 1));
    return from_labels(labels);
}

Partition Partition::singletons(std::size_t n)
{
    std::vector<int> labels(n);
    for (std::size_t i = 0; i < n; ++i)
        labels[i] = static_cast<int>(i);
    return from_labels(labels);
}

Partition Partition::full(std::size_t n) { return from_labels(std::vector<int>(n, 0)); }

std::vector<std::vector<int>> Partition::blocks() const
{
    std::vector<std::vector<int>> out(block_count_);
    for (std::size_t i = 0; i < labels_.size(); ++i)
        out[static_cast<std::size_t>(labels_[i])].push_back(static_cast<int>(i + 1));
    return out;
}

std::vector<int> Partition::block_containing(int i) const
{
    std::vector<int> out;
    int b = block_of(i);
    for (std::size_t j = 0; j < labels_.size(); ++j)
        if (labels_[j] == b)
            out.push_back(static_cast<int>(j + 1));
    return out;
}

bool Partition::is_noncrossing() const
{
    // Between consecutive elements a < c of one block, every other block
    // must lie strictly inside (a, c) or strictly outside.
    const std::size_t n = labels_.size();
    std::vector<std::size_t> lo(block_count_, n), hi(block_count_, 0);
    for (std::size_t i = 0; i < n; ++i) {
        auto b = static_cast<std::size_t>(labels_[i]);
        lo[b] = std::min(lo[b], i);
        hi[b] = std::max(hi[b], i);
    }
    std::vector<std::size_t> last(block_count_, n);
    for (std::size_t c = 0; c < n; ++c) {
        auto bc = static_cast<std::size_t>(labels_[c]);
        std::size_t a = last[bc];
        if (a != n) {
            for (std::size_t b = a + 1; b < c; ++b) {
                auto bb = static_cast<std::size_t>(labels_[b]);
                if (lo[bb] < a || hi[bb] > c)
                    return false;
            }
        }
        last[bc] = c;
    }
    return true;
}

std::string Partition::str() const
{
    std::string s = "[";
    bool first_block = true;
    for (const auto& b : blocks()) {
        s += first_block ? "[" : ",[";
        first_block = false;
        for (std::size_t i = 0; i < b.size(); ++i)
            s += (i ? "," : "") + std::to_string(b[i]);
        s += "]";
    }
    return s + "]";
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept
{
    std::size_t h = p.size();
    for (int l : p.labels())
        h = h * 31 + static_cast<std::size_t>(l) + 1;
    return h;
}

Partition parse_partition(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("partition: ") + e.what());
    }
    if (!j.is_array())
        throw ParseError("partition: expected an array of blocks");
    std::vector<std::vector<int>> blocks;
    std::size_t n = 0;
    for (const auto& b : j) {
        if (!b.is_array())
            throw ParseError("partition: each block must be an array");
        std::vector<int> block;
        for (const auto& e : b) {
            if (!e.is_number_integer())
                throw ParseError("partition: elements must be integers");
            block.push_back(e.get<int>());
        }
        n += block.size();
        blocks.push_back(std::move(block));
    }
    return Partition::from_blocks(n, blocks);
}

Partition concat(const Partition& p, const Partition& q)
{
    std::vector<int> labels = p.labels();
    int shift = static_cast<int>(p.block_count());
    for (int l : q.labels())
        labels.push_back(l + shift);
    return Partition::from_labels(labels);
}

namespace {

Partition join(const Partition& p, int i, int j)
{
    std::vector<int> labels = p.labels();
    int from = p.block_of(j), to = p.block_of(i);
    for (int& l : labels)
        if (l == from)
            l = to;
    return Partition::from_labels(labels);
}

} // namespace

Partition right_merge(const Partition& p, const Partition& q)
{
    if (p.empty() || q.empty())
        throw DomainError("right merge needs two nonempty partitions");
    Partition c = concat(p, q);
    return join(c, static_cast<int>(p.size()), static_cast<int>(c.size()));
}

Partition left_merge(const Partition& p, const Partition& q)
{
    if (p.empty() || q.empty())
        throw DomainError("left merge needs two nonempty partitions");
    Partition c = concat(p, q);
    return join(c, 1, static_cast<int>(p.size()) + 1);
}

Partition merge_op(MergeKind kind, const Partition& p, const Partition& q)
{
    switch (kind) {
    case MergeKind::concat:
        return concat(p, q);
    case MergeKind::right:
        return right_merge(p, q);
    default:
        return left_merge(p, q);
    }
}

Partition interleave(const Partition& p, const Partition& q)
{
    if (p.size() != q.size())
        throw DomainError("interleave: sizes differ");
    const int shift = static_cast<int>(p.block_count());
    std::vector<int> labels;
    labels.reserve(2 * p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        labels.push_back(p.labels()[i]);
        labels.push_back(q.labels()[i] + shift);
    }
    return Partition::from_labels(labels);
}

Partition restrict_range(const Partition& p, int lo, int hi, int skip)
{
    std::vector<int> labels;
    for (int i = lo; i <= hi; ++i)
        if (i != skip)
            labels.push_back(p.block_of(i));
    return Partition::from_labels(labels);
}

bool refines(const Partition& p, const Partition& q)
{
    if (p.size() != q.size())
        return false;
    std::vector<int> image(p.block_count(), -1);
    for (std::size_t i = 0; i < p.size(); ++i) {
        auto b = static_cast<std::size_t>(p.labels()[i]);
        if (image[b] == -1)
            image[b] = q.labels()[i];
        else if (image[b] != q.labels()[i])
            return false;
    }
    return true;
}

Partition kreweras(const Partition& p)
{
    if (!p.is_noncrossing())
        throw DomainError("kreweras: input partition " + p.str() + " is crossing");
    const Partition* best = nullptr;
    std::vector<const Partition*> admissible;
    for (const auto& q : enumerate_ncp(p.size())) {
        if (!interleave(p, q).is_noncrossing())
            continue;
        admissible.push_back(&q);
        if (!best || refines(*best, q))
            best = &q;
    }
    for (const auto* q : admissible)
        if (!refines(*q, *best))
            throw DomainError("kreweras: no largest admissible partition for " + p.str());
    return *best;
}

namespace {

void grow(std::vector<int>& labels, std::size_t i, int max_label, std::vector<Partition>& out)
{
    if (i == labels.size()) {
        Partition p = Partition::from_labels(labels);
        if (p.is_noncrossing())
            out.push_back(std::move(p));
        return;
    }
    for (int l = 0; l <= max_label + 1; ++l) {
        labels[i] = l;
        grow(labels, i + 1, std::max(max_label, l), out);
    }
}

} // namespace

const std::vector<Partition>& enumerate_ncp(std::size_t n)
{
    if (n > 12)
        throw DomainError("enumerate_ncp: n must be at most 12");
    static std::mutex mu;
    static std::map<std::size_t, std::unique_ptr<std::vector<Partition>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[n];
    if (!slot) {
        slot = std::make_unique<std::vector<Partition>>();
        std::vector<int> labels(n);
        if (n == 0)
            slot->push_back(Partition());
        else
            grow(labels, 1, 0, *slot);
    }
    return *slot;
}

std::string render_ascii(const Partition& p)
{
    // One row per block, nested blocks drawn lower; elements as columns.
    const std::size_t n = p.size();
    if (n == 0)
        return "(empty)\n";
    auto blocks = p.blocks();
    std::vector<std::size_t> depth(blocks.size(), 0);
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (std::size_t j = 0; j < blocks.size(); ++j)
            if (i != j && blocks[j].front() < blocks[i].front() && blocks[i].back() < blocks[j].back())
                ++depth[i];
    std::size_t rows = 1 + *std::max_element(depth.begin(), depth.end());
    std::vector<std::string> grid(rows, std::string(4 * n, ' '));
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        std::size_t r = depth[b];
        auto first = static_cast<std::size_t>(blocks[b].front() - 1);
        auto last = static_cast<std::size_t>(blocks[b].back() - 1);
        for (std::size_t c = 4 * first; c <= 4 * last; ++c)
            grid[r][c] = '-';
        for (int e : blocks[b]) {
            auto col = 4 * static_cast<std::size_t>(e - 1);
            grid[r][col] = '+';
            for (std::size_t rr = r + 1; rr < rows; ++rr)
                grid[rr][col] = '|';
        }
    }
    std::string out;
    for (auto& row : grid) {
        row.erase(row.find_last_not_of(' ') + 1);
        out += row + "\n";
    }
    for (std::size_t i = 1; i <= n; ++i) {
        std::string num = std::to_string(i);
        out += num + std::string(4 - std::min<std::size_t>(num.size(), 3), ' ');
    }
    out.erase(out.find_last_not_of(' ') + 1);
    return out + "\n";
}

} // namespace freeconv
