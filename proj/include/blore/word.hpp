#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "blore/errors.hpp"
#include "blore/rational.hpp"

namespace blore {

/// Letters are 0-based indices into the alphabet, rendered as 'a','b','c',...
using Letter = std::uint8_t;

inline constexpr int kMaxAlphabet = 26;

/// Guard against runaway expansions like a^10000000000 in caret input.
inline constexpr std::size_t kMaxWordLength = 1'000'000;

inline char letter_char(Letter a) { return static_cast<char>('a' + a); }

/// Immutable finite sequence of letters over an indexed alphabet.
/// Equality and ordering compare letter sequences; the alphabet size is
/// carried metadata (it bounds letter ids and scopes binary-only operations).
class Word {
public:
    Word() = default;

    Word(std::vector<Letter> letters, int alphabet_size)
        : letters_(std::move(letters)), alphabet_size_(alphabet_size) {
        if (alphabet_size_ < 0 || alphabet_size_ > kMaxAlphabet)
            throw std::invalid_argument("Word: alphabet size must be in [0, 26]");
        for (Letter a : letters_)
            if (a >= alphabet_size_) throw std::invalid_argument("Word: letter id exceeds alphabet size");
    }

    Word(std::span<const Letter> letters, int alphabet_size)
        : Word(std::vector<Letter>(letters.begin(), letters.end()), alphabet_size) {}

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    int alphabet_size() const { return alphabet_size_; }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    std::span<const Letter> letters() const { return letters_; }

    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }

    Word subword(std::size_t pos, std::size_t len) const {
        return Word(std::vector<Letter>(letters_.begin() + pos, letters_.begin() + pos + len), alphabet_size_);
    }

    friend bool operator==(const Word& x, const Word& y) { return x.letters_ == y.letters_; }
    friend std::strong_ordering operator<=>(const Word& x, const Word& y) {
        return std::lexicographical_compare_three_way(x.letters_.begin(), x.letters_.end(),
                                                      y.letters_.begin(), y.letters_.end());
    }

private:
    std::vector<Letter> letters_;
    int alphabet_size_ = 0;
};

/// Parses plain form `[a-z]+` or caret form `a^2b^3a^3` (exponent optional,
/// whitespace ignored). Without an explicit alphabet size the letters used
/// must form a contiguous prefix of a..z and the alphabet defaults to the
/// number of distinct letters present.
inline Word parse_word(std::string_view text, std::optional<int> alphabet_size = {}) {
    std::vector<Letter> letters;
    std::uint32_t used_mask = 0;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == '\r')) ++i;
    };
    skip_ws();
    while (i < text.size()) {
        char c = text[i];
        if (c < 'a' || c > 'z') throw parse_error(std::string("unexpected character '") + c + "' in word");
        Letter a = static_cast<Letter>(c - 'a');
        ++i;
        skip_ws();
        std::uint64_t exponent = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            skip_ws();
            if (i >= text.size() || text[i] < '0' || text[i] > '9') throw parse_error("expected digits after '^'");
            exponent = 0;
            while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
                exponent = exponent * 10 + static_cast<std::uint64_t>(text[i] - '0');
                if (exponent > kMaxWordLength) throw parse_error("exponent too large");
                ++i;
            }
            if (exponent == 0) throw parse_error("exponent must be positive");
            skip_ws();
        }
        if (letters.size() + exponent > kMaxWordLength) throw parse_error("word too long");
        letters.insert(letters.end(), static_cast<std::size_t>(exponent), a);
        used_mask |= 1u << a;
    }
    int distinct = std::popcount(used_mask);
    int size = alphabet_size.value_or(distinct);
    if (size < 0 || size > kMaxAlphabet) throw parse_error("alphabet size must be in [0, 26]");
    for (Letter a : letters)
        if (a >= size)
            throw parse_error(alphabet_size
                                  ? std::string("letter '") + letter_char(a) + "' exceeds alphabet size"
                                  : std::string("letters are not a contiguous prefix of a..z; "
                                                "pass an explicit alphabet size"));
    return Word(std::move(letters), size);
}

inline std::string render_plain(const Word& w) {
    std::string out;
    out.reserve(w.size());
    for (Letter a : w) out.push_back(letter_char(a));
    return out;
}

inline std::string render_caret(const Word& w) {
    std::string out;
    std::size_t i = 0;
    while (i < w.size()) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        out.push_back(letter_char(w[i]));
        if (j - i > 1) {
            out.push_back('^');
            out += std::to_string(j - i);
        }
        i = j;
    }
    return out;
}

/// Canonical rendering: plain up to 40 letters, caret form beyond.
inline std::string render(const Word& w) { return w.size() <= 40 ? render_plain(w) : render_caret(w); }

inline Word reverse(const Word& w) {
    std::vector<Letter> out(w.begin(), w.end());
    std::reverse(out.begin(), out.end());
    return Word(std::move(out), w.alphabet_size());
}

/// Letterwise a<->b swap; defined for binary words only (the empty word maps
/// to itself).
inline Word complement(const Word& w) {
    if (w.empty()) return w;
    if (w.alphabet_size() != 2) throw std::invalid_argument("complement: word is not binary");
    std::vector<Letter> out;
    out.reserve(w.size());
    for (Letter a : w) out.push_back(static_cast<Letter>(1 - a));
    return Word(std::move(out), 2);
}

inline bool is_palindrome(std::span<const Letter> s) {
    for (std::size_t i = 0, j = s.size(); i + 1 < j; ++i, --j)
        if (s[i] != s[j - 1]) return false;
    return true;
}

inline bool is_palindrome(const Word& w) { return is_palindrome(w.letters()); }

/// Set of letters occurring in w, ascending.
inline std::vector<Letter> alph(const Word& w) {
    std::uint32_t mask = 0;
    for (Letter a : w) mask |= 1u << a;
    std::vector<Letter> out;
    for (int a = 0; a < kMaxAlphabet; ++a)
        if (mask >> a & 1) out.push_back(static_cast<Letter>(a));
    return out;
}

inline std::size_t letter_count(const Word& w, Letter a) {
    return static_cast<std::size_t>(std::count(w.begin(), w.end(), a));
}

inline std::array<std::uint32_t, kMaxAlphabet> letter_counts(std::span<const Letter> s) {
    std::array<std::uint32_t, kMaxAlphabet> counts{};
    for (Letter a : s) ++counts[a];
    return counts;
}

/// True iff u and v are permutations of each other.
inline bool abelian_equivalent(const Word& u, const Word& v) {
    return u.size() == v.size() && letter_counts(u.letters()) == letter_counts(v.letters());
}

/// All factors of w (contiguous subwords), including the empty word and w
/// itself, deduplicated and sorted.
inline std::vector<Word> factors(const Word& w) {
    std::set<std::vector<Letter>> seen;
    seen.emplace();
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j <= w.size(); ++j)
            seen.emplace(w.begin() + i, w.begin() + j);
    std::vector<Word> out;
    out.reserve(seen.size());
    for (const auto& s : seen) out.emplace_back(s, w.alphabet_size());
    return out;
}

/// All rotations of w, deduplicated and sorted.
inline std::vector<Word> conjugates(const Word& w) {
    std::set<std::vector<Letter>> seen;
    if (w.empty()) seen.emplace();
    for (std::size_t i = 0; i < w.size(); ++i) {
        std::vector<Letter> rot(w.begin() + i, w.end());
        rot.insert(rot.end(), w.begin(), w.begin() + i);
        seen.insert(std::move(rot));
    }
    std::vector<Word> out;
    out.reserve(seen.size());
    for (const auto& s : seen) out.emplace_back(s, w.alphabet_size());
    return out;
}

/// The k-th fractional power of u: the shortest prefix of u^inf whose length
/// is at least k*|u|, i.e. the length-ceil(k*|u|) prefix. Requires k >= 1.
inline Word fractional_power(const Word& u, const Rational& k) {
    if (u.empty()) throw std::invalid_argument("fractional_power: base word is empty");
    if (k.num < k.den) throw std::invalid_argument("fractional_power: exponent must be at least 1");
    unsigned long long len =
        (static_cast<unsigned long long>(k.num) * u.size() + static_cast<unsigned long long>(k.den) - 1) /
        static_cast<unsigned long long>(k.den);
    if (len > kMaxWordLength) throw std::invalid_argument("fractional_power: result too long");
    std::vector<Letter> out;
    out.reserve(static_cast<std::size_t>(len));
    for (std::size_t i = 0; i < len; ++i) out.push_back(u[i % u.size()]);
    return Word(std::move(out), u.alphabet_size());
}

}  // namespace blore

template <>
struct std::hash<blore::Word> {
    std::size_t operator()(const blore::Word& w) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (blore::Letter a : w) {
            h ^= a;
            h *= 1099511628211ull;
        }
        return h;
    }
};
