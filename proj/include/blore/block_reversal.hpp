#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "blore/errors.hpp"
#include "blore/word.hpp"

namespace blore {

/// Default cap on |w| for operations that walk all 2^(|w|-1) block
/// partitions. Overridable per call (and via the CLI / BLORE_MAX_BLOCK_LEN).
inline constexpr int kDefaultMaxBlockLen = 24;

/// A decomposition of a length-n word into non-empty blocks, encoded as the
/// set of cut positions drawn from {1, ..., n-1} (bit p-1 = cut at p).
struct BlockPartition {
    int source_length = 0;
    std::uint64_t cut_mask = 0;

    static BlockPartition make(int source_length, std::uint64_t cut_mask) {
        if (source_length < 0) throw std::invalid_argument("BlockPartition: negative length");
        if (source_length == 0 && cut_mask != 0)
            throw std::invalid_argument("BlockPartition: the empty word admits no cuts");
        if (source_length > 0 && source_length <= 64 && (cut_mask >> (source_length - 1)) != 0)
            throw std::invalid_argument("BlockPartition: cut position out of range");
        return BlockPartition{source_length, cut_mask};
    }

    int block_count() const { return source_length == 0 ? 0 : std::popcount(cut_mask) + 1; }

    std::vector<int> cuts() const {
        std::vector<int> out;
        for (int p = 1; p < source_length; ++p)
            if (cut_mask >> (p - 1) & 1) out.push_back(p);
        return out;
    }
};

namespace detail {

// Writes B_t ... B_1 for the blocks of src under cut_mask. dst and src must
// not alias and both hold n letters.
inline void apply_partition_into(Letter* dst, const Letter* src, int n, std::uint64_t cut_mask) {
    int out = 0;
    int end = n;
    for (int pos = n - 1; pos >= 1; --pos) {
        if (cut_mask >> (pos - 1) & 1) {
            std::copy(src + pos, src + end, dst + out);
            out += end - pos;
            end = pos;
        }
    }
    std::copy(src, src + end, dst + out);
}

inline std::uint64_t mask_space(int n) {
    if (n <= 1) return 1;
    if (n > 64) return ~0ull;
    return 1ull << (n - 1);
}

inline void check_block_len(std::size_t n, int max_len) {
    if (n > static_cast<std::size_t>(max_len))
        throw resource_limit_error("block reversal: word of length " + std::to_string(n) +
                                       " exceeds the partition-enumeration cap of " + std::to_string(max_len),
                                   mask_space(static_cast<int>(std::min<std::size_t>(n, 65))));
}

}  // namespace detail

/// Concatenates the blocks of w in reverse order.
inline Word apply_partition(const Word& w, const BlockPartition& p) {
    if (p.source_length != static_cast<int>(w.size()))
        throw std::invalid_argument("apply_partition: partition length does not match the word");
    if (w.size() > 1 && (p.cut_mask >> (w.size() - 1)) != 0)
        throw std::invalid_argument("apply_partition: cut position out of range");
    std::vector<Letter> out(w.size());
    detail::apply_partition_into(out.data(), w.letters().data(), static_cast<int>(w.size()), p.cut_mask);
    return Word(std::move(out), w.alphabet_size());
}

struct BrVisitStats {
    std::uint64_t masks_explored = 0;
    std::uint64_t distinct_visited = 0;
    bool stopped_early = false;
};

/// Invokes visit once per distinct element of BR(w), in cut-mask order (the
/// order is not part of the contract). visit returns false to stop early.
/// BR of the empty word is {empty word}.
template <class Visitor>
BrVisitStats br_stream(const Word& w, Visitor&& visit, int max_len = kDefaultMaxBlockLen) {
    detail::check_block_len(w.size(), max_len);
    BrVisitStats stats;
    int n = static_cast<int>(w.size());
    if (n == 0) {
        stats.masks_explored = 1;
        stats.distinct_visited = 1;
        stats.stopped_early = !visit(std::span<const Letter>{});
        return stats;
    }
    std::uint64_t total = detail::mask_space(n);
    std::vector<Letter> buf(static_cast<std::size_t>(n));
    std::string key(static_cast<std::size_t>(n), '\0');
    std::unordered_set<std::string> seen;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        ++stats.masks_explored;
        detail::apply_partition_into(buf.data(), w.letters().data(), n, mask);
        key.assign(buf.begin(), buf.end());
        if (!seen.insert(key).second) continue;
        ++stats.distinct_visited;
        if (!visit(std::span<const Letter>(buf.data(), buf.size()))) {
            stats.stopped_early = true;
            break;
        }
    }
    return stats;
}

/// The materialized block reversal set of a word, with enumeration
/// statistics. Elements are sorted, so iteration order is deterministic.
struct BRSet {
    Word source;
    std::vector<Word> elements;
    std::uint64_t partitions_explored = 0;
    std::uint64_t distinct_count = 0;

    bool contains(const Word& v) const { return std::binary_search(elements.begin(), elements.end(), v); }
};

inline BRSet enumerate_br(const Word& w, int max_len = kDefaultMaxBlockLen) {
    BRSet out;
    out.source = w;
    auto stats = br_stream(
        w,
        [&](std::span<const Letter> v) {
            out.elements.emplace_back(v, w.alphabet_size());
            return true;
        },
        max_len);
    std::sort(out.elements.begin(), out.elements.end());
    out.partitions_explored = stats.masks_explored;
    out.distinct_count = stats.distinct_visited;
    return out;
}

/// |BR(w)| without materializing the sorted element list.
inline std::uint64_t br_count(const Word& w, int max_len = kDefaultMaxBlockLen) {
    return br_stream(w, [](std::span<const Letter>) { return true; }, max_len).distinct_visited;
}

/// Membership test v in BR(w) by dynamic programming, with no partition
/// enumeration: g(i) = "the length-i prefix of v is some reversed-order
/// block decomposition of the length-i suffix of w", g(0) = true and
/// g(i) = OR over j < i of g(j) and v[j..i) == w[n-i..n-j).
inline bool br_contains(const Word& w, const Word& v) {
    if (!abelian_equivalent(w, v)) return false;
    std::size_t n = w.size();
    if (n == 0) return true;
    std::vector<char> reachable(n + 1, 0);
    reachable[0] = 1;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (reachable[j] &&
                std::equal(v.begin() + static_cast<std::ptrdiff_t>(j), v.begin() + static_cast<std::ptrdiff_t>(i),
                           w.begin() + static_cast<std::ptrdiff_t>(n - i))) {
                reachable[i] = 1;
                break;
            }
    return reachable[n] != 0;
}

}  // namespace blore
