#pragma once

// Set partitions of [n], with the operations used on noncrossing partitions.
//
// Storage is the restricted growth string: label[i] is the index of the block
// of element i+1, blocks numbered by increasing minimum. This form is
// canonical, so structural equality is partition equality.

#include <cstddef>
#include <string>
#include <vector>

namespace freeconv {

class Partition {
public:
    // The empty partition of [0].
    Partition() = default;

    // Blocks are lists of 1-based elements; any order is accepted.
    static Partition from_blocks(std::size_t n, const std::vector<std::vector<int>>& blocks);
    // Arbitrary labels per element; equal labels share a block.
    static Partition from_labels(const std::vector<int>& labels);

    static Partition singletons(std::size_t n); // 0_n
    static Partition full(std::size_t n);       // 1_n

    std::size_t size() const noexcept { return labels_.size(); }
    bool empty() const noexcept { return labels_.empty(); }
    std::size_t block_count() const noexcept { return block_count_; }

    // Canonical blocks: ascending within, sorted by minimum.
    std::vector<std::vector<int>> blocks() const;
    const std::vector<int>& labels() const noexcept { return labels_; }
    // Block index of the 1-based element i.
    int block_of(int i) const { return labels_[static_cast<std::size_t>(i - 1)]; }
    std::vector<int> block_containing(int i) const;

    bool is_noncrossing() const;

    // "[[1,3],[2],[4]]"
    std::string str() const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.labels_ == b.labels_; }
    friend bool operator<(const Partition& a, const Partition& b) { return a.labels_ < b.labels_; }

private:
    std::vector<int> labels_;
    std::size_t block_count_ = 0;
};

struct PartitionHash {
    std::size_t operator()(const Partition& p) const noexcept;
};

// Parses "[[1,3],[2],[4]]" (JSON array of arrays).
Partition parse_partition(const std::string& text);

enum class MergeKind { concat, right, left };

// concat: P * Q. right: P merged-right Q, joins the blocks of |P| and |P|+|Q|.
// left: joins the blocks of 1 and |P|+1. Merges need both operands nonempty.
Partition merge_op(MergeKind kind, const Partition& p, const Partition& q);
Partition concat(const Partition& p, const Partition& q);
Partition right_merge(const Partition& p, const Partition& q);
Partition left_merge(const Partition& p, const Partition& q);

// P on odd positions, Q on even positions.
Partition interleave(const Partition& p, const Partition& q);

// Restriction to the elements [lo, hi] (1-based, inclusive), skipping
// `skip` when it lies inside, relabelled to start at 1.
Partition restrict_range(const Partition& p, int lo, int hi, int skip = 0);

// Reverse refinement: every block of p lies in a block of q.
bool refines(const Partition& p, const Partition& q);

// Brute force over NCP_n.
Partition kreweras(const Partition& p);

// All noncrossing partitions of [n], in lexicographic order of their
// restricted growth strings. Reference stays valid for the process lifetime.
const std::vector<Partition>& enumerate_ncp(std::size_t n);

// Hooks-and-bars rendering, output only.
std::string render_ascii(const Partition& p);

} // namespace freeconv
