#pragma once

#include <chrono>
#include <cstdint>
#include <exception>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <unordered_set>
#include <utility>
#include <vector>

#include "blore/block_reversal.hpp"
#include "blore/classifier.hpp"
#include "blore/richness.hpp"
#include "blore/rle.hpp"

namespace blore {

/// Ground truth for one word: stream the distinct elements of BR(w),
/// richness-test each, stop at the first non-rich element.
struct OracleResult {
    bool all_rich = false;
    std::optional<Word> witness;          // first non-rich element in cut-mask order
    std::uint64_t elements_checked = 0;   // distinct elements richness-tested
};

/// Exhaustive all-rich decision by Definition-level enumeration only; it
/// never consults the pattern tables, which is what makes classifier-vs-
/// oracle sweeps meaningful. The scratch tree is reused across elements.
inline OracleResult oracle_all_rich(const Word& w, PalindromeIndex& scratch,
                                    int max_len = kDefaultMaxBlockLen) {
    OracleResult result;
    br_stream(
        w,
        [&](std::span<const Letter> v) {
            ++result.elements_checked;
            if (is_rich(v, scratch)) return true;
            result.witness = Word(v, w.alphabet_size());
            return false;
        },
        max_len);
    result.all_rich = !result.witness.has_value();
    return result;
}

inline OracleResult oracle_all_rich(const Word& w, int max_len = kDefaultMaxBlockLen) {
    PalindromeIndex scratch(w.alphabet_size());
    return oracle_all_rich(w, scratch, max_len);
}

struct SweepSpec {
    int alphabet_size = 2;
    int min_len = 1;
    int max_len = 12;
    bool operator==(const SweepSpec&) const = default;
};

struct Mismatch {
    Word word;
    Verdict verdict;
    OracleResult oracle;
};

struct LengthCount {
    int length = 0;
    std::uint64_t total_words = 0;
    std::uint64_t all_rich_count = 0;
    bool operator==(const LengthCount&) const = default;
};

/// Result of an exhaustive classifier-vs-oracle sweep. Identical for any
/// worker count except for wall_time_ms.
struct SweepReport {
    SweepSpec spec;
    std::uint64_t words_checked = 0;
    std::vector<Mismatch> mismatches;
    std::vector<LengthCount> counts;
    double wall_time_ms = 0.0;
};

namespace detail {

inline std::uint64_t checked_pow(std::uint64_t base, int exp) {
    std::uint64_t out = 1;
    for (int i = 0; i < exp; ++i) {
        if (out > (1ull << 40)) throw resource_limit_error("sweep: word space too large");
        out *= base;
    }
    return out;
}

// Decodes the idx-th word of length n over k letters (lexicographic order).
inline void word_from_index(std::uint64_t idx, int n, int k, std::vector<Letter>& out) {
    out.assign(static_cast<std::size_t>(n), 0);
    for (int pos = n - 1; pos >= 0; --pos) {
        out[static_cast<std::size_t>(pos)] = static_cast<Letter>(idx % static_cast<std::uint64_t>(k));
        idx /= static_cast<std::uint64_t>(k);
    }
}

}  // namespace detail

/// Classifies and oracle-checks every word over the given alphabet with
/// min_len <= |w| <= max_len (the full space; no symmetry reduction).
/// Work is sharded across jobs worker threads by contiguous index blocks,
/// so the merged report does not depend on the worker count.
inline SweepReport sweep(int alphabet_size, int min_len, int max_len, int jobs = 1) {
    if (alphabet_size < 1 || alphabet_size > kMaxAlphabet)
        throw std::invalid_argument("sweep: alphabet size must be in [1, 26]");
    if (min_len < 0 || max_len < min_len) throw std::invalid_argument("sweep: bad length range");
    detail::check_block_len(static_cast<std::size_t>(max_len), kDefaultMaxBlockLen);
    if (jobs < 1) jobs = 1;

    auto started = std::chrono::steady_clock::now();
    SweepReport report;
    report.spec = {alphabet_size, min_len, max_len};

    for (int n = min_len; n <= max_len; ++n) {
        std::uint64_t total = detail::checked_pow(static_cast<std::uint64_t>(alphabet_size), n);
        int workers = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(jobs), total));
        std::vector<std::uint64_t> rich_counts(static_cast<std::size_t>(workers), 0);
        std::vector<std::vector<Mismatch>> found(static_cast<std::size_t>(workers));
        std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));

        auto run_block = [&](int worker) {
            try {
                std::uint64_t begin = total * static_cast<std::uint64_t>(worker) / static_cast<std::uint64_t>(workers);
                std::uint64_t end = total * (static_cast<std::uint64_t>(worker) + 1) / static_cast<std::uint64_t>(workers);
                PalindromeIndex scratch(alphabet_size);
                std::vector<Letter> letters;
                for (std::uint64_t idx = begin; idx < end; ++idx) {
                    detail::word_from_index(idx, n, alphabet_size, letters);
                    Word w(letters, alphabet_size);
                    Verdict verdict = classify(w);
                    OracleResult truth = oracle_all_rich(w, scratch);
                    if (truth.all_rich) ++rich_counts[static_cast<std::size_t>(worker)];
                    if (verdict.all_rich != truth.all_rich)
                        found[static_cast<std::size_t>(worker)].push_back({std::move(w), verdict, std::move(truth)});
                }
            } catch (...) {
                errors[static_cast<std::size_t>(worker)] = std::current_exception();
            }
        };

        if (workers <= 1) {
            run_block(0);
        } else {
            std::vector<std::thread> pool;
            pool.reserve(static_cast<std::size_t>(workers));
            for (int worker = 0; worker < workers; ++worker) pool.emplace_back(run_block, worker);
            for (auto& t : pool) t.join();
        }
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);

        LengthCount row{n, total, 0};
        for (int worker = 0; worker < workers; ++worker) {
            row.all_rich_count += rich_counts[static_cast<std::size_t>(worker)];
            for (auto& m : found[static_cast<std::size_t>(worker)]) report.mismatches.push_back(std::move(m));
        }
        report.counts.push_back(row);
        report.words_checked += total;
    }

    report.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    return report;
}

struct SequenceRow {
    int length = 0;
    std::uint64_t total_words = 0;
    std::uint64_t classifier_count = 0;
    std::uint64_t oracle_count = 0;
    bool operator==(const SequenceRow&) const = default;
};

/// Per-length counts of words whose block reversal is all-rich, computed two
/// ways: by classifier enumeration and by the exhaustive oracle.
struct SequenceCounts {
    int alphabet_size = 2;
    std::vector<SequenceRow> rows;

    bool consistent() const {
        for (const SequenceRow& r : rows)
            if (r.classifier_count != r.oracle_count) return false;
        return true;
    }
};

inline SequenceCounts count_all_rich_sequence(int alphabet_size, int max_len, int jobs = 1) {
    SweepReport oracle_side = sweep(alphabet_size, 1, max_len, jobs);
    SequenceCounts out;
    out.alphabet_size = alphabet_size;
    std::vector<Letter> letters;
    for (const LengthCount& row : oracle_side.counts) {
        std::uint64_t by_classifier = 0;
        for (std::uint64_t idx = 0; idx < row.total_words; ++idx) {
            detail::word_from_index(idx, row.length, alphabet_size, letters);
            if (classify(Word(letters, alphabet_size)).all_rich) ++by_classifier;
        }
        out.rows.push_back({row.length, row.total_words, by_classifier, row.all_rich_count});
    }
    return out;
}

/// Results of the block-reversal identity checks: the reversal law
/// {v^R : v in BR(w)} = BR(w^R), exhaustively for binary |w| <= 10, and the
/// concatenation law BR(v)BR(u) within BR(uv) on seeded random pairs.
/// Violations are report content, not errors; identical seeds give
/// identical reports.
struct LawReport {
    std::uint64_t reversal_words_checked = 0;
    std::vector<Word> reversal_violations;
    std::uint64_t concat_pairs_checked = 0;
    std::vector<std::pair<Word, Word>> concat_violations;
    int samples = 0;
    int max_len = 0;
    std::uint64_t seed = 0;
};

inline LawReport check_identity_laws(int samples, int max_len, std::uint64_t seed) {
    LawReport report;
    report.samples = samples;
    report.max_len = max_len;
    report.seed = seed;

    for (int n = 1; n <= 10; ++n) {
        std::vector<Letter> letters(static_cast<std::size_t>(n));
        for (std::uint64_t idx = 0; idx < (1ull << n); ++idx) {
            detail::word_from_index(idx, n, 2, letters);
            Word w(letters, 2);
            ++report.reversal_words_checked;
            BRSet straight = enumerate_br(w);
            std::vector<Word> reversed_elements;
            reversed_elements.reserve(straight.elements.size());
            for (const Word& v : straight.elements) reversed_elements.push_back(reverse(v));
            std::sort(reversed_elements.begin(), reversed_elements.end());
            if (reversed_elements != enumerate_br(reverse(w)).elements) report.reversal_violations.push_back(w);
        }
    }

    std::mt19937_64 rng(seed);
    for (int i = 0; i < samples; ++i) {
        int alphabet = static_cast<int>(rng() % 3) + 1;
        int total_len = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::max(1, max_len - 1)));
        int split = static_cast<int>(rng() % static_cast<std::uint64_t>(total_len + 1));
        std::vector<Letter> letters(static_cast<std::size_t>(total_len));
        for (auto& a : letters) a = static_cast<Letter>(rng() % static_cast<std::uint64_t>(alphabet));
        Word u(std::vector<Letter>(letters.begin(), letters.begin() + split), alphabet);
        Word v(std::vector<Letter>(letters.begin() + split, letters.end()), alphabet);
        Word uv(letters, alphabet);

        std::unordered_set<Word> br_uv;
        br_stream(uv, [&](std::span<const Letter> e) {
            br_uv.insert(Word(e, alphabet));
            return true;
        });
        ++report.concat_pairs_checked;
        BRSet br_u = enumerate_br(u);
        BRSet br_v = enumerate_br(v);
        bool violated = false;
        for (const Word& y : br_v.elements) {
            for (const Word& x : br_u.elements) {
                std::vector<Letter> joined(y.begin(), y.end());
                joined.insert(joined.end(), x.begin(), x.end());
                if (!br_uv.contains(Word(std::move(joined), alphabet))) {
                    violated = true;
                    break;
                }
            }
            if (violated) break;
        }
        if (violated) report.concat_violations.emplace_back(u, v);
    }
    return report;
}

/// One hard-coded end-to-end scenario with its outcome.
struct FixtureReport {
    struct Entry {
        std::string name;
        bool pass;
        std::string detail;
    };
    std::vector<Entry> entries;

    bool all_pass() const {
        for (const Entry& e : entries)
            if (!e.pass) return false;
        return true;
    }
};

namespace detail {

inline Word binary_word(std::string_view text) { return parse_word(text, 2); }

// "(ba)^i" prefix/suffix builders used by the alternating-run fixtures.
inline std::string repeat(std::string_view unit, int times) {
    std::string out;
    for (int i = 0; i < times; ++i) out += unit;
    return out;
}

}  // namespace detail

/// Curated end-to-end scenarios exercising the characterization on both
/// sides: families whose block reversal must be all-rich, families with a
/// pinned non-rich witness, and a 17-letter word none of whose block
/// reversals is rich.
inline FixtureReport fixture_suite() {
    using detail::binary_word;
    using detail::repeat;
    FixtureReport report;
    auto record = [&report](std::string name, bool pass, std::string detail_text = "") {
        report.entries.push_back({std::move(name), pass, std::move(detail_text)});
    };

    {  // (a) exact block reversal set of abbc
        const char* expected[] = {"abbc", "bbca", "bcab", "bcba", "cabb", "cbab", "cbba"};
        BRSet got = enumerate_br(parse_word("abbc"));
        bool pass = got.elements.size() == 7 && got.partitions_explored == 8;
        for (std::size_t i = 0; pass && i < 7; ++i) pass = render_plain(got.elements[i]) == expected[i];
        record("br-abbc-exact-set", pass, "distinct=" + std::to_string(got.distinct_count));
    }

    {  // (b) a^2b^3a^3 is rich yet owns a non-rich block reversal
        Word w = binary_word("a^2b^3a^3");
        Word bad = binary_word("a^2bab^2a^2");
        bool pass = is_rich(w) && br_contains(w, bad) && !is_rich(bad);
        record("rich-word-with-non-rich-element", pass);
    }

    {  // (c) alternating words a(ba)^i and (ab)^i are all-rich for l = 3..8
        bool pass = true;
        std::string detail_text;
        for (int l = 3; l <= 8 && pass; ++l) {
            std::string text = (l % 2 == 1) ? "a" + repeat("ba", (l - 1) / 2) : repeat("ab", l / 2);
            Word w = binary_word(text);
            pass = run_length(w) == l && oracle_all_rich(w).all_rich;
            if (!pass) detail_text = text;
        }
        record("alternating-words-all-rich", pass, detail_text);
    }

    {  // (d) a^2b^3a^3(ba)^i[b] has the pinned non-rich element (ba)^i[b]a^2b^2aba^2
        bool pass = true;
        std::string detail_text;
        for (int l = 3; l <= 8 && pass; ++l) {
            std::string v_text, witness_text;
            if (l % 2 == 1) {
                int i = (l - 3) / 2;
                v_text = "a^2b^3a^3" + repeat("ba", i);
                witness_text = repeat("ba", i) + "a^2b^2aba^2";
            } else {
                int i = (l - 4) / 2;
                v_text = "a^2b^3a^3" + repeat("ba", i) + "b";
                witness_text = repeat("ba", i) + "ba^2b^2aba^2";
            }
            Word v = binary_word(v_text);
            Word witness = binary_word(witness_text);
            pass = run_length(v) == l && br_contains(v, witness) && !is_rich(witness) &&
                   !oracle_all_rich(v).all_rich;
            if (!pass) detail_text = v_text;
        }
        record("pinned-non-rich-witness-family", pass, detail_text);
    }

    {  // (e) a^{n1}babab is all-rich for n1 = 1..10 ...
        bool pass = true;
        std::string detail_text;
        for (int n1 = 1; n1 <= 10 && pass; ++n1) {
            Word w = binary_word("a^" + std::to_string(n1) + "babab");
            pass = oracle_all_rich(w).all_rich;
            if (!pass) detail_text = "n1=" + std::to_string(n1);
        }
        record("a^n1-babab-family-all-rich", pass, detail_text);
        // ... while nearby b-run extensions are not, with pinned witnesses.
        struct Negative {
            const char* word;
            const char* witness;
        } negatives[] = {
            {"a^2babab^3", "bab^2a^2bab"},
            {"a^3babab^2", "abab^2a^2ba"},
            {"a^3babab^3", "bab^2a^3bab"},
        };
        for (const Negative& neg : negatives) {
            Word w = binary_word(neg.word);
            Word witness = binary_word(neg.witness);
            bool neg_pass = br_contains(w, witness) && !is_rich(witness) && !oracle_all_rich(w).all_rich;
            record(std::string("negative-") + neg.word, neg_pass, neg.witness);
        }
    }

    {  // (f) a^{n1}b^{n2}a and ab^{n2}a^{n1} are all-rich for n2 in {3,4}
        bool pass = true;
        std::string detail_text;
        for (int n2 : {3, 4})
            for (int n1 = 1; n1 <= 8 && pass; ++n1) {
                Word lead = binary_word("a^" + std::to_string(n1) + "b^" + std::to_string(n2) + "a");
                Word tail = binary_word("ab^" + std::to_string(n2) + "a^" + std::to_string(n1));
                pass = oracle_all_rich(lead).all_rich && oracle_all_rich(tail).all_rich;
                if (!pass) detail_text = "n1=" + std::to_string(n1) + " n2=" + std::to_string(n2);
            }
        record("three-run-b-block-family-all-rich", pass, detail_text);
    }

    {  // (g) 19 letters over a 17-letter alphabet: no element of BR(w) is rich
        Word w = parse_word("cdeafghbijkblmnaopq");
        std::uint64_t rich_elements = 0;
        PalindromeIndex scratch(w.alphabet_size());
        BrVisitStats stats = br_stream(w, [&](std::span<const Letter> v) {
            if (is_rich(v, scratch)) ++rich_elements;
            return true;
        });
        bool pass = w.size() == 19 && alph(w).size() == 17 && rich_elements == 0 &&
                    stats.masks_explored == (1ull << 18);
        record("spread-letters-no-rich-element", pass,
               "partitions=" + std::to_string(stats.masks_explored) +
                   " rich=" + std::to_string(rich_elements));
    }

    return report;
}

}  // namespace blore
