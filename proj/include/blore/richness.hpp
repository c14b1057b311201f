#pragma once

#include <optional>
#include <set>
#include <span>
#include <vector>

#include "blore/eertree.hpp"
#include "blore/errors.hpp"
#include "blore/word.hpp"

namespace blore {

/// Length cap for the quadratic-or-worse reference scans below. Exceeding it
/// is a loud error, never a silent fallback.
inline constexpr int kDefaultNaiveBound = 64;

/// P(w), via the palindrome tree. Always <= |w|.
inline int pal_count(const Word& w) { return PalindromeIndex(w).pal_count(); }

/// Exact set of non-empty palindromic factors by substring enumeration with
/// dedup. This is the slow reference oracle for pal_count.
inline std::vector<Word> distinct_palindromes(const Word& w, int max_len = kDefaultNaiveBound) {
    if (w.size() > static_cast<std::size_t>(max_len))
        throw resource_limit_error("distinct_palindromes: word longer than the naive-scan bound");
    std::set<std::vector<Letter>> seen;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j <= w.size(); ++j) {
            std::span<const Letter> s(w.letters().data() + i, j - i);
            if (is_palindrome(s)) seen.emplace(s.begin(), s.end());
        }
    std::vector<Word> out;
    out.reserve(seen.size());
    for (const auto& s : seen) out.emplace_back(s, w.alphabet_size());
    return out;
}

/// Richness test over a raw letter span, reusing a caller-owned tree.
/// A word is rich iff every single-letter extension creates a new palindrome
/// node, which lets us bail out at the first non-creating append.
inline bool is_rich(std::span<const Letter> s, PalindromeIndex& scratch) {
    scratch.reset();
    for (Letter a : s)
        if (!scratch.append(a)) return false;
    return true;
}

/// True iff P(w) = |w|; the empty word is rich.
inline bool is_rich(const Word& w) {
    PalindromeIndex tree(w.alphabet_size());
    return is_rich(w.letters(), tree);
}

/// Longest palindromic suffix of a non-empty word.
inline Word longest_palindromic_suffix(const Word& w) {
    if (w.empty()) throw std::invalid_argument("longest_palindromic_suffix: empty word");
    int len = PalindromeIndex(w).longest_suffix_palindrome_length();
    return w.subword(w.size() - static_cast<std::size_t>(len), static_cast<std::size_t>(len));
}

/// Evidence that a word is not rich.
struct RichnessWitness {
    enum class Kind {
        GlenViolation,          // factor contains the palindrome exactly twice, as prefix
                                // and suffix only, yet is not a palindrome itself
        PrefixNonUnioccurrent,  // longest palindromic suffix of the prefix occurs more than once
    };
    Kind kind;
    Word factor;
    Word palindrome;
};

namespace detail {

inline std::size_t occurrence_count(std::span<const Letter> haystack, std::span<const Letter> needle) {
    std::size_t count = 0;
    if (needle.empty() || needle.size() > haystack.size()) return 0;
    for (std::size_t i = 0; i + needle.size() <= haystack.size(); ++i)
        if (std::equal(needle.begin(), needle.end(), haystack.begin() + static_cast<std::ptrdiff_t>(i))) ++count;
    return count;
}

inline std::size_t naive_longest_palindromic_suffix_length(std::span<const Letter> s) {
    for (std::size_t len = s.size(); len >= 1; --len)
        if (is_palindrome(s.subspan(s.size() - len, len))) return len;
    return 0;
}

}  // namespace detail

/// Searches for a factor u holding some palindrome p exactly twice, as prefix
/// and suffix only, with u itself not a palindrome. None exists iff w is
/// rich. Returns the lexicographically-first among the shortest offending
/// factors (with its shortest boundary palindrome) so results are
/// deterministic.
inline std::optional<RichnessWitness> find_glen_violation(const Word& w, int max_len = kDefaultNaiveBound) {
    if (w.size() > static_cast<std::size_t>(max_len))
        throw resource_limit_error("find_glen_violation: word longer than the naive-scan bound");
    for (std::size_t len = 2; len <= w.size(); ++len) {
        std::set<std::vector<Letter>> candidates;
        for (std::size_t i = 0; i + len <= w.size(); ++i)
            candidates.emplace(w.begin() + static_cast<std::ptrdiff_t>(i),
                               w.begin() + static_cast<std::ptrdiff_t>(i + len));
        for (const auto& u : candidates) {
            std::span<const Letter> us(u);
            if (is_palindrome(us)) continue;
            for (std::size_t plen = 1; plen < len; ++plen) {
                std::span<const Letter> p = us.subspan(0, plen);
                if (!is_palindrome(p)) continue;
                if (!std::equal(p.begin(), p.end(), us.end() - static_cast<std::ptrdiff_t>(plen))) continue;
                if (detail::occurrence_count(us, p) == 2)
                    return RichnessWitness{RichnessWitness::Kind::GlenViolation,
                                           Word(u, w.alphabet_size()),
                                           Word(p, w.alphabet_size())};
            }
        }
    }
    return std::nullopt;
}

/// First prefix whose longest palindromic suffix is not unioccurrent, if any.
/// Computed naively (no palindrome tree) so it stays an independent route.
inline std::optional<RichnessWitness> find_prefix_violation(const Word& w) {
    for (std::size_t n = 1; n <= w.size(); ++n) {
        std::span<const Letter> prefix = w.letters().subspan(0, n);
        std::size_t lps = detail::naive_longest_palindromic_suffix_length(prefix);
        if (detail::occurrence_count(prefix, prefix.subspan(n - lps, lps)) != 1)
            return RichnessWitness{RichnessWitness::Kind::PrefixNonUnioccurrent,
                                   Word(prefix, w.alphabet_size()),
                                   Word(prefix.subspan(n - lps, lps), w.alphabet_size())};
    }
    return std::nullopt;
}

/// Unioccurrence criterion: every prefix's longest palindromic suffix occurs
/// exactly once in that prefix. Agrees with is_rich on every word.
inline bool is_rich_prefix_property(const Word& w) { return !find_prefix_violation(w).has_value(); }

/// True iff every conjugate of w is rich and w is a product of two
/// palindromes (either part may be empty, so any rich palindrome qualifies).
inline bool is_circularly_rich(const Word& w) {
    if (w.empty()) throw std::invalid_argument("is_circularly_rich: empty word");
    PalindromeIndex scratch(w.alphabet_size());
    std::vector<Letter> rot(w.begin(), w.end());
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!is_rich(rot, scratch)) return false;
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    }
    for (std::size_t split = 0; split <= w.size(); ++split)
        if (is_palindrome(w.letters().subspan(0, split)) && is_palindrome(w.letters().subspan(split)))
            return true;
    return false;
}

}  // namespace blore
