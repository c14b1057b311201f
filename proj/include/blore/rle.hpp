#pragma once

#include <stdexcept>
#include <vector>

#include "blore/word.hpp"

namespace blore {

struct Run {
    Letter letter;
    int exponent;
    bool operator==(const Run&) const = default;
};

/// Maximal-run decomposition a_1^{n_1} ... a_k^{n_k} of a non-empty word:
/// adjacent runs carry distinct letters and every exponent is positive.
class RunLengthEncoding {
public:
    RunLengthEncoding(std::vector<Run> runs, int alphabet_size)
        : runs_(std::move(runs)), alphabet_size_(alphabet_size) {
        if (runs_.empty()) throw std::invalid_argument("RunLengthEncoding: no runs");
        for (std::size_t i = 0; i < runs_.size(); ++i) {
            if (runs_[i].exponent < 1) throw std::invalid_argument("RunLengthEncoding: exponent must be positive");
            if (i > 0 && runs_[i].letter == runs_[i - 1].letter)
                throw std::invalid_argument("RunLengthEncoding: adjacent runs share a letter");
        }
    }

    const std::vector<Run>& runs() const { return runs_; }
    int run_count() const { return static_cast<int>(runs_.size()); }
    int alphabet_size() const { return alphabet_size_; }

    /// Concatenates letter^exponent over the runs; inverse of rle().
    Word expand() const {
        std::vector<Letter> letters;
        for (const Run& r : runs_) letters.insert(letters.end(), static_cast<std::size_t>(r.exponent), r.letter);
        return Word(std::move(letters), alphabet_size_);
    }

private:
    std::vector<Run> runs_;
    int alphabet_size_;
};

inline RunLengthEncoding rle(const Word& w) {
    if (w.empty()) throw std::invalid_argument("rle: the empty word has no run-length encoding");
    std::vector<Run> runs;
    for (Letter a : w) {
        if (!runs.empty() && runs.back().letter == a)
            ++runs.back().exponent;
        else
            runs.push_back({a, 1});
    }
    return RunLengthEncoding(std::move(runs), w.alphabet_size());
}

/// Word of the run letters in order; length l(w).
inline Word trace(const RunLengthEncoding& r) {
    std::vector<Letter> letters;
    letters.reserve(r.runs().size());
    for (const Run& run : r.runs()) letters.push_back(run.letter);
    return Word(std::move(letters), r.alphabet_size());
}

inline std::vector<int> run_sequence(const RunLengthEncoding& r) {
    std::vector<int> out;
    out.reserve(r.runs().size());
    for (const Run& run : r.runs()) out.push_back(run.exponent);
    return out;
}

/// l(w): number of maximal runs; 0 for the empty word.
inline int run_length(const Word& w) {
    int count = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (i == 0 || w[i] != w[i - 1]) ++count;
    return count;
}

}  // namespace blore
