#pragma once

#include <string>

#include <json.hpp>

#include "blore/classifier.hpp"
#include "blore/verifier.hpp"

namespace blore {

/// Words serialize as {"text", "alphabet_size"} so they reparse exactly even
/// when their letters are not a contiguous alphabet prefix.
inline nlohmann::json to_json(const Word& w) {
    return {{"text", render(w)}, {"alphabet_size", w.alphabet_size()}};
}

inline Word word_from_json(const nlohmann::json& j) {
    return parse_word(j.at("text").get<std::string>(), j.at("alphabet_size").get<int>());
}

inline nlohmann::json to_json(const Verdict& v) {
    nlohmann::json j{{"all_rich", v.all_rich}, {"rule", std::string(rule_name(v.rule))}};
    if (v.matched_form) j["matched_form"] = *v.matched_form;
    return j;
}

inline Verdict verdict_from_json(const nlohmann::json& j) {
    Verdict v;
    v.all_rich = j.at("all_rich").get<bool>();
    auto rule = rule_from_name(j.at("rule").get<std::string>());
    if (!rule) throw parse_error("unknown rule id: " + j.at("rule").get<std::string>());
    v.rule = *rule;
    if (j.contains("matched_form")) v.matched_form = j.at("matched_form").get<std::string>();
    return v;
}

inline nlohmann::json to_json(const OracleResult& o) {
    nlohmann::json j{{"all_rich", o.all_rich}, {"elements_checked", o.elements_checked}};
    if (o.witness) j["witness"] = to_json(*o.witness);
    return j;
}

inline OracleResult oracle_result_from_json(const nlohmann::json& j) {
    OracleResult o;
    o.all_rich = j.at("all_rich").get<bool>();
    o.elements_checked = j.at("elements_checked").get<std::uint64_t>();
    if (j.contains("witness")) o.witness = word_from_json(j.at("witness"));
    return o;
}

inline nlohmann::json to_json(const SweepReport& r) {
    nlohmann::json mismatches = nlohmann::json::array();
    for (const Mismatch& m : r.mismatches)
        mismatches.push_back({{"word", to_json(m.word)},
                              {"classifier", to_json(m.verdict)},
                              {"oracle", to_json(m.oracle)}});
    nlohmann::json counts = nlohmann::json::array();
    for (const LengthCount& c : r.counts)
        counts.push_back({{"length", c.length},
                          {"total_words", c.total_words},
                          {"all_rich_count", c.all_rich_count}});
    return {{"spec",
             {{"alphabet_size", r.spec.alphabet_size}, {"min_len", r.spec.min_len}, {"max_len", r.spec.max_len}}},
            {"words_checked", r.words_checked},
            {"mismatches", mismatches},
            {"counts", counts},
            {"wall_time_ms", r.wall_time_ms}};
}

inline SweepReport sweep_report_from_json(const nlohmann::json& j) {
    SweepReport r;
    r.spec.alphabet_size = j.at("spec").at("alphabet_size").get<int>();
    r.spec.min_len = j.at("spec").at("min_len").get<int>();
    r.spec.max_len = j.at("spec").at("max_len").get<int>();
    r.words_checked = j.at("words_checked").get<std::uint64_t>();
    for (const auto& m : j.at("mismatches"))
        r.mismatches.push_back(
            {word_from_json(m.at("word")), verdict_from_json(m.at("classifier")), oracle_result_from_json(m.at("oracle"))});
    for (const auto& c : j.at("counts"))
        r.counts.push_back({c.at("length").get<int>(), c.at("total_words").get<std::uint64_t>(),
                            c.at("all_rich_count").get<std::uint64_t>()});
    r.wall_time_ms = j.at("wall_time_ms").get<double>();
    return r;
}

/// One row per length: length,total_words,all_rich_count
inline std::string to_csv(const SweepReport& r) {
    std::string out = "length,total_words,all_rich_count\n";
    for (const LengthCount& c : r.counts)
        out += std::to_string(c.length) + "," + std::to_string(c.total_words) + "," +
               std::to_string(c.all_rich_count) + "\n";
    return out;
}

inline nlohmann::json to_json(const SequenceCounts& s) {
    nlohmann::json rows = nlohmann::json::array();
    for (const SequenceRow& r : s.rows)
        rows.push_back({{"length", r.length},
                        {"total_words", r.total_words},
                        {"all_rich_count", r.classifier_count},
                        {"oracle_count", r.oracle_count}});
    return {{"alphabet_size", s.alphabet_size}, {"counts", rows}, {"consistent", s.consistent()}};
}

inline std::string to_csv(const SequenceCounts& s) {
    std::string out = "length,total_words,all_rich_count\n";
    for (const SequenceRow& r : s.rows)
        out += std::to_string(r.length) + "," + std::to_string(r.total_words) + "," +
               std::to_string(r.classifier_count) + "\n";
    return out;
}

inline nlohmann::json to_json(const LawReport& r) {
    nlohmann::json reversal = nlohmann::json::array();
    for (const Word& w : r.reversal_violations) reversal.push_back(to_json(w));
    nlohmann::json concat = nlohmann::json::array();
    for (const auto& [u, v] : r.concat_violations) concat.push_back({{"u", to_json(u)}, {"v", to_json(v)}});
    return {{"reversal_words_checked", r.reversal_words_checked},
            {"reversal_violations", reversal},
            {"concat_pairs_checked", r.concat_pairs_checked},
            {"concat_violations", concat},
            {"samples", r.samples},
            {"max_len", r.max_len},
            {"seed", r.seed}};
}

}  // namespace blore
