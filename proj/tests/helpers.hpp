#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "blore/word.hpp"

namespace blore::testing {

inline Word word_at(std::uint64_t idx, int len, int alphabet) {
    std::vector<Letter> letters(static_cast<std::size_t>(len));
    for (int pos = len - 1; pos >= 0; --pos) {
        letters[static_cast<std::size_t>(pos)] = static_cast<Letter>(idx % static_cast<std::uint64_t>(alphabet));
        idx /= static_cast<std::uint64_t>(alphabet);
    }
    return Word(std::move(letters), alphabet);
}

/// Calls fn(word) for every word of each length in [min_len, max_len].
template <class Fn>
void for_each_word(int alphabet, int min_len, int max_len, Fn&& fn) {
    for (int n = min_len; n <= max_len; ++n) {
        std::uint64_t total = 1;
        for (int i = 0; i < n; ++i) total *= static_cast<std::uint64_t>(alphabet);
        for (std::uint64_t idx = 0; idx < total; ++idx) fn(word_at(idx, n, alphabet));
    }
}

inline Word random_word(std::mt19937_64& rng, int max_len, int max_alphabet = 4) {
    int alphabet = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_alphabet));
    int len = static_cast<int>(rng() % static_cast<std::uint64_t>(max_len + 1));
    std::vector<Letter> letters(static_cast<std::size_t>(len));
    for (auto& a : letters) a = static_cast<Letter>(rng() % static_cast<std::uint64_t>(alphabet));
    return Word(std::move(letters), alphabet);
}

}  // namespace blore::testing
