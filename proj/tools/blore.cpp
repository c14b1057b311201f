// blore: block reversal and palindromic richness toolkit.
//
// Exit codes: 0 success / verified, 1 semantic mismatch found,
// 2 input error, 3 resource limit exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "blore/blore.hpp"
#include "blore/report_io.hpp"

namespace {

using namespace blore;

struct WordInput {
    std::string text;
    int alphabet = 0;  // 0 = infer from the letters used

    Word parse() const { return parse_word(text, alphabet > 0 ? std::optional<int>(alphabet) : std::nullopt); }
};

void add_word_options(CLI::App* cmd, WordInput& in) {
    cmd->add_option("word", in.text, "word in plain (abbc) or caret (a^2b^3a^3) form")->required();
    cmd->add_option("--alphabet", in.alphabet, "alphabet size override (default: letters used)");
}

CLI::Option* add_block_len_option(CLI::App* cmd, int& max_block_len) {
    return cmd->add_option("--max-block-len", max_block_len, "cap on |w| for partition enumeration")
        ->envname("BLORE_MAX_BLOCK_LEN")
        ->default_val(kDefaultMaxBlockLen);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
    out << text;
}

std::string verdict_line(bool all_rich) { return all_rich ? "AllRich" : "ExistsNonRich"; }

void print_witness(const RichnessWitness& w) {
    std::cout << "witness kind: "
              << (w.kind == RichnessWitness::Kind::GlenViolation ? "GlenViolation" : "PrefixNonUnioccurrent")
              << "\n";
    std::cout << "witness factor: " << render(w.factor) << "\n";
    std::cout << "witness palindrome: " << render(w.palindrome) << "\n";
}

int run_rle(const WordInput& in, const std::string& format) {
    Word w = in.parse();
    if (w.empty()) throw std::invalid_argument("the empty word has no run-length encoding");
    RunLengthEncoding r = rle(w);
    std::string runseq;
    for (int e : run_sequence(r)) runseq += (runseq.empty() ? "" : ",") + std::to_string(e);
    if (format == "json") {
        nlohmann::json j{{"word", render(w)},
                         {"rle", render_caret(w)},
                         {"trace", render(trace(r))},
                         {"run_sequence", run_sequence(r)},
                         {"run_length", r.run_count()}};
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "word: " << render(w) << "\n";
    std::cout << "rle: " << render_caret(w) << "\n";
    std::cout << "trace: " << render(trace(r)) << "\n";
    std::cout << "run sequence: (" << runseq << ")\n";
    std::cout << "l(w) = " << r.run_count() << "\n";
    return 0;
}

int run_pal(const WordInput& in, const std::string& format) {
    Word w = in.parse();
    std::vector<Word> pals = distinct_palindromes(w);
    int count = pal_count(w);
    bool rich = is_rich(w);
    if (format == "json") {
        nlohmann::json list = nlohmann::json::array();
        for (const Word& p : pals) list.push_back(render(p));
        nlohmann::json j{{"word", render(w)}, {"palindromes", list}, {"pal_count", count}, {"rich", rich}};
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "word: " << render(w) << "\n";
    std::cout << "palindromic factors:";
    for (const Word& p : pals) std::cout << ' ' << render(p);
    std::cout << "\n";
    std::cout << "P(w) = " << count << "\n";
    std::cout << "rich: " << (rich ? "true" : "false") << "\n";
    return 0;
}

int run_rich(const WordInput& in, const std::string& format) {
    Word w = in.parse();
    bool rich = is_rich(w);
    std::optional<RichnessWitness> witness;
    if (!rich) witness = find_glen_violation(w);
    if (format == "json") {
        nlohmann::json j{{"word", render(w)}, {"rich", rich}, {"pal_count", pal_count(w)}};
        if (witness) {
            j["witness"] = {{"kind", "GlenViolation"},
                            {"factor", render(witness->factor)},
                            {"palindrome", render(witness->palindrome)}};
        }
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "word: " << render(w) << "\n";
    std::cout << "rich: " << (rich ? "true" : "false") << " (P(w) = " << pal_count(w) << ", |w| = " << w.size()
              << ")\n";
    if (witness) print_witness(*witness);
    return 0;
}

int run_power(const WordInput& in, const std::string& exponent, const std::string& format) {
    Word w = in.parse();
    Word result = fractional_power(w, parse_rational(exponent));
    if (format == "json") {
        nlohmann::json j{{"word", render(w)}, {"exponent", exponent}, {"result", render(result)}};
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << render(result) << "\n";
    return 0;
}

int run_circ(const WordInput& in, const std::string& format) {
    Word w = in.parse();
    bool circ = is_circularly_rich(w);
    if (format == "json") {
        nlohmann::json j{{"word", render(w)}, {"circularly_rich", circ}};
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "circularly rich: " << (circ ? "true" : "false") << "\n";
    return 0;
}

int run_br_enum(const WordInput& in, int max_block_len, bool annotate, const std::string& format) {
    Word w = in.parse();
    BRSet set = enumerate_br(w, max_block_len);
    if (format == "json") {
        nlohmann::json elements = nlohmann::json::array();
        for (const Word& v : set.elements) {
            if (annotate)
                elements.push_back({{"word", render(v)}, {"rich", is_rich(v)}});
            else
                elements.push_back(render(v));
        }
        nlohmann::json j{{"word", render(w)},
                         {"elements", elements},
                         {"distinct_count", set.distinct_count},
                         {"partitions_explored", set.partitions_explored}};
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    for (const Word& v : set.elements) {
        std::cout << render(v);
        if (annotate) std::cout << (is_rich(v) ? "\trich" : "\tnon-rich");
        std::cout << "\n";
    }
    return 0;
}

int run_br_count(const WordInput& in, int max_block_len, const std::string& format) {
    Word w = in.parse();
    std::uint64_t count = br_count(w, max_block_len);
    if (format == "json") {
        nlohmann::json j{{"word", render(w)}, {"distinct_count", count}};
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << count << "\n";
    return 0;
}

int run_br_member(const WordInput& in, const WordInput& candidate_in, const std::string& format) {
    Word w = in.parse();
    Word v = candidate_in.alphabet > 0 || candidate_in.text.empty()
                 ? candidate_in.parse()
                 : parse_word(candidate_in.text, w.alphabet_size());
    bool member = br_contains(w, v);
    if (format == "json") {
        nlohmann::json j{{"word", render(w)}, {"candidate", render(v)}, {"member", member}};
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << (member ? "true" : "false") << "\n";
    return 0;
}

int run_classify(const WordInput& in, bool check, int max_block_len, const std::string& format) {
    Word w = in.parse();
    Verdict verdict = classify(w);
    std::optional<OracleResult> oracle;
    if (check) oracle = oracle_all_rich(w, max_block_len);
    bool agree = !oracle || oracle->all_rich == verdict.all_rich;
    if (format == "json") {
        nlohmann::json j{{"word", render(w)}, {"classifier", to_json(verdict)}};
        if (oracle) {
            j["oracle"] = to_json(*oracle);
            j["agreement"] = agree;
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "word: " << render(w) << "\n";
        std::cout << "verdict: " << verdict_line(verdict.all_rich) << "\n";
        std::cout << "rule: " << rule_name(verdict.rule) << "\n";
        if (verdict.matched_form) std::cout << "form: " << *verdict.matched_form << "\n";
        if (oracle) {
            std::cout << "oracle: " << verdict_line(oracle->all_rich)
                      << " (elements checked: " << oracle->elements_checked << ")\n";
            if (oracle->witness) std::cout << "oracle witness: " << render(*oracle->witness) << "\n";
            std::cout << "agreement: " << (agree ? "yes" : "NO") << "\n";
        }
    }
    return agree ? 0 : 1;
}

struct VerifyOptions {
    int alphabet = 2;
    int min_len = 1;
    int max_len = 12;
    int jobs = 1;
    bool laws = false;
    int samples = 1000;
    std::uint64_t seed = 0;
    std::string format = "text";
    std::string out_path;
};

int run_verify(const VerifyOptions& opt) {
    if (opt.laws) {
        LawReport report = check_identity_laws(opt.samples, 16, opt.seed);
        bool clean = report.reversal_violations.empty() && report.concat_violations.empty();
        if (opt.format == "json") {
            emit(to_json(report).dump(2) + "\n", opt.out_path);
        } else {
            std::string text;
            text += "reversal law: " + std::to_string(report.reversal_words_checked) + " words, " +
                    std::to_string(report.reversal_violations.size()) + " violations\n";
            text += "concatenation law: " + std::to_string(report.concat_pairs_checked) + " pairs (seed " +
                    std::to_string(report.seed) + "), " + std::to_string(report.concat_violations.size()) +
                    " violations\n";
            emit(text, opt.out_path);
        }
        return clean ? 0 : 1;
    }
    SweepReport report = sweep(opt.alphabet, opt.min_len, opt.max_len, opt.jobs);
    if (opt.format == "json") {
        emit(to_json(report).dump(2) + "\n", opt.out_path);
    } else if (opt.format == "csv") {
        emit(to_csv(report), opt.out_path);
    } else {
        std::string text;
        for (const LengthCount& c : report.counts)
            text += "length " + std::to_string(c.length) + ": total=" + std::to_string(c.total_words) +
                    " all_rich=" + std::to_string(c.all_rich_count) + "\n";
        text += "words checked: " + std::to_string(report.words_checked) + "\n";
        text += "mismatches: " + std::to_string(report.mismatches.size()) + "\n";
        for (const Mismatch& m : report.mismatches)
            text += "  " + render(m.word) + " classifier=" + verdict_line(m.verdict.all_rich) +
                    " oracle=" + verdict_line(m.oracle.all_rich) + "\n";
        text += "wall time: " + std::to_string(report.wall_time_ms) + " ms\n";
        emit(text, opt.out_path);
    }
    return report.mismatches.empty() ? 0 : 1;
}

int run_sequence(int alphabet, int max_len, int jobs, const std::string& format, const std::string& out_path) {
    SequenceCounts counts = count_all_rich_sequence(alphabet, max_len, jobs);
    if (format == "json") {
        emit(to_json(counts).dump(2) + "\n", out_path);
    } else if (format == "csv") {
        emit(to_csv(counts), out_path);
    } else {
        std::string text;
        for (const SequenceRow& r : counts.rows)
            text += "length " + std::to_string(r.length) + ": total=" + std::to_string(r.total_words) +
                    " all_rich=" + std::to_string(r.classifier_count) +
                    (r.classifier_count == r.oracle_count ? "" : " ORACLE=" + std::to_string(r.oracle_count)) +
                    "\n";
        emit(text, out_path);
    }
    return counts.consistent() ? 0 : 1;
}

int run_dump_forms(const std::string& format) {
    const PatternTable& table = closed_pattern_table();
    if (format == "json") {
        nlohmann::json forms = nlohmann::json::array();
        for (auto it = table.rbegin(); it != table.rend(); ++it)
            for (const PatternForm& f : it->second)
                forms.push_back({{"run_length", it->first},
                                 {"id", f.id},
                                 {"symmetry", f.symmetry},
                                 {"template", render_form_template(f)},
                                 {"constraints", render_form_constraints(f)}});
        std::cout << forms.dump(2) << "\n";
        return 0;
    }
    for (auto it = table.rbegin(); it != table.rend(); ++it)
        for (const PatternForm& f : it->second) {
            std::string constraints = render_form_constraints(f);
            std::cout << "l=" << it->first << "  " << f.id << "  [" << f.symmetry << "]  "
                      << render_form_template(f) << (constraints.empty() ? "" : "  where " + constraints)
                      << "\n";
        }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"block reversal and palindromic richness toolkit"};
    app.require_subcommand(1);
    int exit_code = 0;

    WordInput word_in, candidate_in;
    std::string format = "text";
    std::string exponent;
    bool annotate = false;
    bool check = false;
    int max_block_len = kDefaultMaxBlockLen;
    VerifyOptions verify_opt;
    int seq_alphabet = 2, seq_max_len = 12, seq_jobs = 1;
    std::string seq_format = "csv", seq_out;
    std::string dump_format = "text";

    auto add_format = [&format](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* cmd_rle = app.add_subcommand("rle", "run-length encoding, trace, run sequence");
    add_word_options(cmd_rle, word_in);
    add_format(cmd_rle);
    cmd_rle->callback([&] { exit_code = run_rle(word_in, format); });

    CLI::App* cmd_pal = app.add_subcommand("pal", "distinct palindromic factors and P(w)");
    add_word_options(cmd_pal, word_in);
    add_format(cmd_pal);
    cmd_pal->callback([&] { exit_code = run_pal(word_in, format); });

    CLI::App* cmd_rich = app.add_subcommand("rich", "richness verdict, with a witness on failure");
    add_word_options(cmd_rich, word_in);
    add_format(cmd_rich);
    cmd_rich->callback([&] { exit_code = run_rich(word_in, format); });

    CLI::App* cmd_power = app.add_subcommand("power", "fractional power u^(p/q)");
    add_word_options(cmd_power, word_in);
    cmd_power->add_option("exponent", exponent, "rational exponent, e.g. 5/3")->required();
    add_format(cmd_power);
    cmd_power->callback([&] { exit_code = run_power(word_in, exponent, format); });

    CLI::App* cmd_circ = app.add_subcommand("circ", "circular richness verdict");
    add_word_options(cmd_circ, word_in);
    add_format(cmd_circ);
    cmd_circ->callback([&] { exit_code = run_circ(word_in, format); });

    CLI::App* cmd_br = app.add_subcommand("br", "block reversal set operations");
    cmd_br->require_subcommand(1);
    CLI::App* br_enum = cmd_br->add_subcommand("enum", "list the distinct elements, sorted");
    add_word_options(br_enum, word_in);
    br_enum->add_flag("--annotate", annotate, "mark each element rich/non-rich");
    add_block_len_option(br_enum, max_block_len);
    add_format(br_enum);
    br_enum->callback([&] { exit_code = run_br_enum(word_in, max_block_len, annotate, format); });
    CLI::App* br_count_cmd = cmd_br->add_subcommand("count", "number of distinct elements");
    add_word_options(br_count_cmd, word_in);
    add_block_len_option(br_count_cmd, max_block_len);
    add_format(br_count_cmd);
    br_count_cmd->callback([&] { exit_code = run_br_count(word_in, max_block_len, format); });
    CLI::App* br_member = cmd_br->add_subcommand("member", "membership test for a candidate word");
    add_word_options(br_member, word_in);
    br_member->add_option("candidate", candidate_in.text, "candidate word")->required();
    br_member->add_option("--candidate-alphabet", candidate_in.alphabet,
                          "alphabet size for the candidate (default: the word's)");
    add_format(br_member);
    br_member->callback([&] { exit_code = run_br_member(word_in, candidate_in, format); });

    CLI::App* cmd_classify = app.add_subcommand("classify", "decide whether every element of BR(w) is rich");
    add_word_options(cmd_classify, word_in);
    cmd_classify->add_flag("--check", check, "also run the exhaustive oracle and compare");
    add_block_len_option(cmd_classify, max_block_len);
    add_format(cmd_classify);
    cmd_classify->callback([&] { exit_code = run_classify(word_in, check, max_block_len, format); });

    CLI::App* cmd_verify = app.add_subcommand("verify", "exhaustive classifier-vs-oracle sweep");
    cmd_verify->add_option("--alphabet", verify_opt.alphabet, "alphabet size")->check(CLI::Range(1, 26));
    cmd_verify->add_option("--min-len", verify_opt.min_len, "minimum word length");
    cmd_verify->add_option("--max-len", verify_opt.max_len, "maximum word length");
    cmd_verify->add_option("--jobs", verify_opt.jobs, "worker threads")->check(CLI::Range(1, 256));
    cmd_verify->add_flag("--laws", verify_opt.laws,
                         "check the reversal and concatenation identities instead of sweeping");
    cmd_verify->add_option("--samples", verify_opt.samples, "random pairs for the concatenation law");
    cmd_verify->add_option("--seed", verify_opt.seed, "seed for law sampling");
    cmd_verify->add_option("--format", verify_opt.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd_verify->add_option("--out", verify_opt.out_path, "write the report to a file");
    cmd_verify->callback([&] { exit_code = run_verify(verify_opt); });

    CLI::App* cmd_sequence = app.add_subcommand("sequence", "per-length all-rich counts (dual-computed)");
    cmd_sequence->add_option("--alphabet", seq_alphabet, "alphabet size")->check(CLI::Range(1, 26));
    cmd_sequence->add_option("--max-len", seq_max_len, "maximum word length");
    cmd_sequence->add_option("--jobs", seq_jobs, "worker threads")->check(CLI::Range(1, 256));
    cmd_sequence->add_option("--format", seq_format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd_sequence->add_option("--out", seq_out, "write the table to a file");
    cmd_sequence->callback(
        [&] { exit_code = run_sequence(seq_alphabet, seq_max_len, seq_jobs, seq_format, seq_out); });

    CLI::App* cmd_dump = app.add_subcommand("dump-forms", "print the closed pattern table");
    cmd_dump->add_option("--format", dump_format, "output format")->check(CLI::IsMember({"text", "json"}));
    cmd_dump->callback([&] { exit_code = run_dump_forms(dump_format); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const blore::resource_limit_error& e) {
        std::cerr << "resource limit: " << e.what();
        if (e.attempted_mask_space()) std::cerr << " (mask space " << *e.attempted_mask_space() << ")";
        std::cerr << "\n";
        return 3;
    } catch (const blore::parse_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
