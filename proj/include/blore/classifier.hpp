#pragma once

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "blore/rle.hpp"
#include "blore/word.hpp"

namespace blore {

/// Which rule of the decision tree settled a classification. Exactly one
/// rule fires per word.
enum class RuleId {
    Empty,
    Unary,
    NonBinaryDistinct,
    NonBinaryRepeat,
    BinaryShort,
    BinaryL2,
    BinaryL3Table,
    BinaryL4Table,
    BinaryL5Table,
    BinaryL6Table,
    BinaryL7Table,
    BinaryL8Table,
    BinaryL9Plus,
    BinaryTableMiss,
};

inline std::string_view rule_name(RuleId rule) {
    switch (rule) {
        case RuleId::Empty: return "Empty";
        case RuleId::Unary: return "Unary";
        case RuleId::NonBinaryDistinct: return "NonBinaryDistinct";
        case RuleId::NonBinaryRepeat: return "NonBinaryRepeat";
        case RuleId::BinaryShort: return "BinaryShort";
        case RuleId::BinaryL2: return "BinaryL2";
        case RuleId::BinaryL3Table: return "BinaryL3Table";
        case RuleId::BinaryL4Table: return "BinaryL4Table";
        case RuleId::BinaryL5Table: return "BinaryL5Table";
        case RuleId::BinaryL6Table: return "BinaryL6Table";
        case RuleId::BinaryL7Table: return "BinaryL7Table";
        case RuleId::BinaryL8Table: return "BinaryL8Table";
        case RuleId::BinaryL9Plus: return "BinaryL9Plus";
        case RuleId::BinaryTableMiss: return "BinaryTableMiss";
    }
    return "?";
}

inline std::optional<RuleId> rule_from_name(std::string_view name) {
    for (int i = 0; i <= static_cast<int>(RuleId::BinaryTableMiss); ++i)
        if (rule_name(static_cast<RuleId>(i)) == name) return static_cast<RuleId>(i);
    return std::nullopt;
}

inline RuleId table_rule_for(int l) {
    switch (l) {
        case 3: return RuleId::BinaryL3Table;
        case 4: return RuleId::BinaryL4Table;
        case 5: return RuleId::BinaryL5Table;
        case 6: return RuleId::BinaryL6Table;
        case 7: return RuleId::BinaryL7Table;
        case 8: return RuleId::BinaryL8Table;
        default: throw std::invalid_argument("table_rule_for: run-sequence length must be in [3, 8]");
    }
}

inline constexpr int kUnboundedExponent = std::numeric_limits<int>::max();

struct ExponentRange {
    int min = 1;
    int max = kUnboundedExponent;
    bool operator==(const ExponentRange&) const = default;
    bool contains(int e) const { return e >= min && e <= max; }
    bool fixed() const { return min == max; }
};

/// Ties two run exponents to a fixed sum (e.g. n2 + n4 = 4).
struct SumConstraint {
    int first;
    int second;
    int total;
    bool operator==(const SumConstraint&) const = default;
};

/// One parameterized run-sequence form: a trace template over {a, b} plus a
/// per-run exponent constraint. The stable string id names the form in CLI
/// and JSON output; symmetry records which closure image this entry is.
struct PatternForm {
    std::string id;
    std::string symmetry;  // "id", "R", "C" or "RC"
    std::vector<Letter> trace;
    std::vector<ExponentRange> exponents;
    std::vector<SumConstraint> sums;

    int run_count() const { return static_cast<int>(trace.size()); }

    bool same_shape(const PatternForm& other) const {
        return trace == other.trace && exponents == other.exponents && sums == other.sums;
    }

    /// Matches a run sequence whose trace letters were normalized to 0/1.
    bool matches(const std::vector<Letter>& word_trace, const std::vector<int>& word_exponents) const {
        if (word_trace != trace) return false;
        for (std::size_t i = 0; i < exponents.size(); ++i)
            if (!exponents[i].contains(word_exponents[i])) return false;
        for (const SumConstraint& s : sums)
            if (word_exponents[static_cast<std::size_t>(s.first)] +
                    word_exponents[static_cast<std::size_t>(s.second)] !=
                s.total)
                return false;
        return true;
    }
};

/// Forms keyed by run-sequence length l.
using PatternTable = std::map<int, std::vector<PatternForm>>;

namespace detail {

inline std::vector<Letter> template_trace(std::string_view letters) {
    std::vector<Letter> out;
    out.reserve(letters.size());
    for (char c : letters) out.push_back(static_cast<Letter>(c - 'a'));
    return out;
}

inline PatternForm make_form(std::string id, std::string_view trace_letters,
                             std::vector<ExponentRange> exponents, std::vector<SumConstraint> sums = {}) {
    PatternForm f{std::move(id), "id", template_trace(trace_letters), std::move(exponents), std::move(sums)};
    for (auto& s : f.sums)
        if (s.first > s.second) std::swap(s.first, s.second);
    std::sort(f.sums.begin(), f.sums.end(),
              [](const SumConstraint& x, const SumConstraint& y) { return x.first < y.first; });
    return f;
}

inline PatternForm complement_form(const PatternForm& f) {
    PatternForm out = f;
    for (Letter& a : out.trace) a = static_cast<Letter>(1 - a);
    return out;
}

inline PatternForm reverse_form(const PatternForm& f) {
    PatternForm out = f;
    std::reverse(out.trace.begin(), out.trace.end());
    std::reverse(out.exponents.begin(), out.exponents.end());
    int last = f.run_count() - 1;
    for (auto& s : out.sums) {
        s.first = last - s.first;
        s.second = last - s.second;
        if (s.first > s.second) std::swap(s.first, s.second);
    }
    std::sort(out.sums.begin(), out.sums.end(),
              [](const SumConstraint& x, const SumConstraint& y) { return x.first < y.first; });
    return out;
}

}  // namespace detail

/// Run-sequence forms (over the a-leading orientation) whose block reversal
/// consists of rich words, for binary words longer than 7 letters with
/// 3 <= l(w) <= 8. Shorter words and l(w) in {1, 2} are handled by earlier
/// classification rules, never by these tables.
inline const PatternTable& base_pattern_table() {
    using detail::make_form;
    static const PatternTable table = [] {
        constexpr ExponentRange one{1, 1};
        constexpr ExponentRange two{2, 2};
        constexpr ExponentRange any{1, kUnboundedExponent};
        PatternTable t;
        t[8] = {
            make_form("L8.abababab", "abababab", {one, one, one, one, one, one, one, one}),
        };
        t[7] = {
            make_form("L7.ababab^2a", "abababa", {one, one, one, one, one, two, one}),
            make_form("L7.abab^2aba", "abababa", {one, one, one, two, one, one, one}),
            make_form("L7.ab^2ababa", "abababa", {one, two, one, one, one, one, one}),
        };
        t[6] = {
            make_form("L6.T.ab^2aba^2b", "ababab", {one, two, one, one, two, one}),
            make_form("L6.T.abab^2a^2b", "ababab", {one, one, one, two, two, one}),
            make_form("L6.T.ababa^2b^2", "ababab", {one, one, one, one, two, two}),
            make_form("L6.T.a^2bab^2ab", "ababab", {two, one, one, two, one, one}),
            make_form("L6.T.a^2babab^2", "ababab", {two, one, one, one, one, two}),
            make_form("L6.T.aba^2b^2ab", "ababab", {one, one, two, two, one, one}),
            make_form("L6.T.a^n1-babab", "ababab", {{3, kUnboundedExponent}, one, one, one, one, one}),
        };
        t[5] = {
            make_form("L5.a^n1-ba^n3-ba^n5", "ababa", {any, one, any, one, any}),
            make_form("L5.ab^n2-ab^n4-a^2", "ababa", {one, any, one, any, two}, {{1, 3, 4}}),
            make_form("L5.a^2b^n2-ab^n4-a", "ababa", {two, any, one, any, one}, {{1, 3, 4}}),
            make_form("L5.ab^n2-a^2b^n4-a", "ababa", {one, any, two, any, one}, {{1, 3, 4}}),
        };
        t[4] = {
            make_form("L4.ab^n2-ab^n4", "abab", {one, any, one, any}),
            make_form("L4.a^n1-ba^n3-b", "abab", {any, one, any, one}),
            make_form("L4.S.a^n1-b^n2-a^n3-b^n4", "abab", {any, any, any, any}, {{0, 2, 4}, {1, 3, 4}}),
        };
        t[3] = {
            make_form("L3.a^2b^4a^2", "aba", {two, {4, 4}, two}),
            make_form("L3.ab^m2-a", "aba", {one, any, one}),
            make_form("L3.a^m1-ba^m3", "aba", {any, one, any}),
            make_form("L3.a^m1-b^2a^m3", "aba", {any, two, any}),
            make_form("L3.ab^n2-a^n3", "aba", {one, {3, 4}, {3, kUnboundedExponent}}),
            make_form("L3.a^n1-b^n2-a", "aba", {{3, kUnboundedExponent}, {3, 4}, one}),
        };
        return t;
    }();
    return table;
}

/// Closes every form list under {identity, reverse, complement,
/// reverse-complement}, dropping structural duplicates. Input forms keep
/// their listed order and matching priority; closure images follow them,
/// tagged with the symmetry that produced them. Idempotent.
inline PatternTable symmetry_closure(const PatternTable& table) {
    PatternTable out;
    for (const auto& [l, forms] : table) {
        std::vector<PatternForm>& closed = out[l];
        auto push_unique = [&closed](PatternForm form, const char* symmetry) {
            for (const PatternForm& existing : closed)
                if (existing.same_shape(form)) return;
            if (symmetry) form.symmetry = symmetry;
            closed.push_back(std::move(form));
        };
        for (const PatternForm& f : forms) push_unique(f, nullptr);
        for (const PatternForm& f : forms) {
            push_unique(detail::reverse_form(f), "R");
            push_unique(detail::complement_form(f), "C");
            push_unique(detail::reverse_form(detail::complement_form(f)), "RC");
        }
    }
    return out;
}

inline const PatternTable& closed_pattern_table() {
    static const PatternTable table = symmetry_closure(base_pattern_table());
    return table;
}

/// Human-readable template for one form, e.g. "a^2 b^4 a^2" or "a^n1 b a b a b".
inline std::string render_form_template(const PatternForm& f) {
    std::string out;
    for (int i = 0; i < f.run_count(); ++i) {
        if (i > 0) out.push_back(' ');
        out.push_back(letter_char(f.trace[static_cast<std::size_t>(i)]));
        const ExponentRange& e = f.exponents[static_cast<std::size_t>(i)];
        if (e.fixed() && e.min == 1) continue;
        out.push_back('^');
        if (e.fixed())
            out += std::to_string(e.min);
        else
            out += "n" + std::to_string(i + 1);
    }
    return out;
}

/// Constraint summary for one form, e.g. "n1>=3" or "n2 in [3,4], n2+n4=4".
inline std::string render_form_constraints(const PatternForm& f) {
    std::string out;
    auto add = [&out](const std::string& piece) {
        if (!out.empty()) out += ", ";
        out += piece;
    };
    for (int i = 0; i < f.run_count(); ++i) {
        const ExponentRange& e = f.exponents[static_cast<std::size_t>(i)];
        if (e.fixed()) continue;
        std::string name = "n" + std::to_string(i + 1);
        if (e.max == kUnboundedExponent) {
            if (e.min > 1) add(name + ">=" + std::to_string(e.min));
        } else {
            add(name + " in [" + std::to_string(e.min) + "," + std::to_string(e.max) + "]");
        }
    }
    for (const SumConstraint& s : f.sums)
        add("n" + std::to_string(s.first + 1) + "+n" + std::to_string(s.second + 1) + "=" +
            std::to_string(s.total));
    return out;
}

/// First form of the closed l-table matching w's run sequence, in fixed
/// order (forms as listed, closure images id/R/C/RC after their base form).
/// The word's two letters are matched smaller-id-to-'a'; both orientations
/// are present in the closed table, so no input normalization happens.
inline std::optional<std::string> match_binary_form(const Word& w, int l) {
    if (l < 3 || l > 8) throw std::invalid_argument("match_binary_form: run-sequence length must be in [3, 8]");
    std::vector<Letter> letters_used = alph(w);
    if (letters_used.size() != 2) throw std::invalid_argument("match_binary_form: word is not binary");
    RunLengthEncoding encoding = rle(w);
    std::vector<Letter> word_trace;
    std::vector<int> word_exponents;
    word_trace.reserve(encoding.runs().size());
    word_exponents.reserve(encoding.runs().size());
    for (const Run& r : encoding.runs()) {
        word_trace.push_back(r.letter == letters_used[0] ? 0 : 1);
        word_exponents.push_back(r.exponent);
    }
    auto it = closed_pattern_table().find(l);
    if (it == closed_pattern_table().end()) return std::nullopt;
    for (const PatternForm& f : it->second)
        if (f.matches(word_trace, word_exponents)) return f.id;
    return std::nullopt;
}

/// Outcome of the all-rich classification.
struct Verdict {
    bool all_rich;
    RuleId rule;
    std::optional<std::string> matched_form;
};

/// Decides, in time linear in |w|, whether every element of BR(w) is rich.
///
/// Decision tree: empty and unary words qualify; a word using three or more
/// distinct letters qualifies iff all its letters are distinct; a binary word
/// of length at most 7 always qualifies; longer binary words qualify iff
/// l(w) = 2 or the run sequence matches the closed pattern table for
/// 3 <= l(w) <= 8 (l(w) >= 9 never qualifies).
inline Verdict classify(const Word& w) {
    if (w.empty()) return {true, RuleId::Empty, {}};
    std::vector<Letter> letters_used = alph(w);
    if (letters_used.size() == 1) return {true, RuleId::Unary, {}};
    if (letters_used.size() >= 3) {
        bool all_distinct = letters_used.size() == w.size();
        return {all_distinct, all_distinct ? RuleId::NonBinaryDistinct : RuleId::NonBinaryRepeat, {}};
    }
    if (w.size() <= 7) return {true, RuleId::BinaryShort, {}};
    int l = run_length(w);
    if (l == 2) return {true, RuleId::BinaryL2, {}};
    if (l >= 9) return {false, RuleId::BinaryL9Plus, {}};
    std::optional<std::string> form = match_binary_form(w, l);
    if (form) return {true, table_rule_for(l), std::move(form)};
    return {false, RuleId::BinaryTableMiss, {}};
}

}  // namespace blore
