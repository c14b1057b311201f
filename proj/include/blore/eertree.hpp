#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "blore/word.hpp"

namespace blore {

/// Incremental palindrome tree (eertree). Non-root nodes biject with the
/// distinct non-empty palindromic factors of the indexed text, so
/// pal_count() is exact at every prefix. Appending one letter creates at
/// most one node; the word seen so far is rich iff every append created one.
///
/// Instances are cheap to reset() and reuse; a completed index is immutable
/// through the const interface and safe to share across threads.
class PalindromeIndex {
public:
    struct Node {
        int len;          // palindrome length; the two roots have -1 and 0
        int suffix_link;  // longest proper palindromic suffix
        int first_end;    // end position (exclusive) of the first occurrence
        std::array<int, kMaxAlphabet> next;  // extension x . p . x
    };

    explicit PalindromeIndex(int alphabet_size = kMaxAlphabet) : alphabet_size_(alphabet_size) {
        if (alphabet_size_ < 0 || alphabet_size_ > kMaxAlphabet)
            throw std::invalid_argument("PalindromeIndex: alphabet size must be in [0, 26]");
        reset();
    }

    explicit PalindromeIndex(const Word& w) : PalindromeIndex(w.alphabet_size()) {
        for (Letter a : w) append(a);
    }

    void reset() {
        nodes_.clear();
        text_.clear();
        suffix_node_.clear();
        Node root_minus{-1, 0, 0, {}};
        root_minus.next.fill(-1);
        Node root_empty{0, 0, 0, {}};
        root_empty.next.fill(-1);
        nodes_.push_back(root_minus);
        nodes_.push_back(root_empty);
        last_ = 1;
    }

    /// Appends one letter; returns true iff a new distinct palindromic factor
    /// was created (the longest palindromic suffix of the new prefix).
    bool append(Letter c) {
        if (c >= alphabet_size_) throw std::invalid_argument("PalindromeIndex: letter exceeds alphabet");
        int i = static_cast<int>(text_.size());
        text_.push_back(c);
        int base = extension_base(last_, c, i);
        int existing = nodes_[base].next[c];
        if (existing != -1) {
            last_ = existing;
            suffix_node_.push_back(last_);
            return false;
        }
        Node node;
        node.len = nodes_[base].len + 2;
        node.first_end = i + 1;
        node.next.fill(-1);
        node.suffix_link =
            node.len == 1 ? 1 : nodes_[extension_base(nodes_[base].suffix_link, c, i)].next[c];
        int id = static_cast<int>(nodes_.size());
        nodes_.push_back(node);
        nodes_[base].next[c] = id;
        last_ = id;
        suffix_node_.push_back(id);
        return true;
    }

    int size() const { return static_cast<int>(text_.size()); }
    int alphabet_size() const { return alphabet_size_; }

    /// Number of distinct non-empty palindromic factors of the indexed text.
    int pal_count() const { return static_cast<int>(nodes_.size()) - 2; }

    const std::vector<Node>& nodes() const { return nodes_; }

    /// Length of the longest palindromic suffix of the length-prefix_len
    /// prefix (prefix_len in [1, size()]).
    int longest_suffix_palindrome_length(int prefix_len) const {
        if (prefix_len < 1 || prefix_len > size())
            throw std::invalid_argument("PalindromeIndex: prefix length out of range");
        return nodes_[suffix_node_[static_cast<std::size_t>(prefix_len) - 1]].len;
    }

    int longest_suffix_palindrome_length() const { return longest_suffix_palindrome_length(size()); }

    /// Materializes the palindrome stored at a node (roots give the empty word).
    Word palindrome_at(int node) const {
        const Node& n = nodes_.at(static_cast<std::size_t>(node));
        if (n.len <= 0) return Word(std::vector<Letter>{}, alphabet_size_);
        return Word(std::span<const Letter>(text_.data() + n.first_end - n.len, static_cast<std::size_t>(n.len)),
                    alphabet_size_);
    }

private:
    // Deepest palindromic suffix of text_[0..i] that can be extended by c,
    // i.e. the first node v on the suffix-link chain with text_[i - len(v) - 1] == c.
    // The length -1 root always terminates the walk.
    int extension_base(int v, Letter c, int i) const {
        while (true) {
            int j = i - nodes_[v].len - 1;
            if (j >= 0 && text_[j] == c) return v;
            v = nodes_[v].suffix_link;
        }
    }

    std::vector<Node> nodes_;
    std::vector<Letter> text_;
    std::vector<int> suffix_node_;  // node of the longest palindromic suffix after each append
    int last_ = 1;
    int alphabet_size_;
};

}  // namespace blore
