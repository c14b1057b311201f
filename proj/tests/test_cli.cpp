#include <cstdio>
#include <cstdlib>
#include <string>

#include <sys/wait.h>

#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code;
    std::string output;  // stdout and stderr combined
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
    std::string cmd = env + (env.empty() ? "" : " ") + BLORE_CLI_PATH + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) output.append(buf, n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

std::size_t count_lines(const std::string& text) {
    std::size_t lines = 0;
    for (char c : text)
        if (c == '\n') ++lines;
    return lines;
}

}  // namespace

TEST_CASE("cli rle") {
    RunResult r = run_cli("rle a^2b^3a^3");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "rle: a^2b^3a^3"));
    CHECK(contains(r.output, "trace: aba"));
    CHECK(contains(r.output, "run sequence: (2,3,3)"));
    CHECK(contains(r.output, "l(w) = 3"));
}

TEST_CASE("cli pal") {
    RunResult r = run_cli("pal abbc");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "palindromic factors: a b bb c"));
    CHECK(contains(r.output, "P(w) = 4"));
    CHECK(contains(r.output, "rich: true"));
}

TEST_CASE("cli rich with witness") {
    RunResult r = run_cli("rich a^2bab^2a^2");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "rich: false"));
    CHECK(contains(r.output, "witness kind: GlenViolation"));
    CHECK(contains(r.output, "witness factor:"));
}

TEST_CASE("cli power") {
    RunResult r = run_cli("power aba 5/3");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "abaab\n");
    CHECK(run_cli("power ab 1/2").exit_code == 2);
}

TEST_CASE("cli circ") {
    RunResult r = run_cli("circ ab");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "circularly rich: true"));
    CHECK(contains(run_cli("circ aabbabaa").output, "circularly rich: false"));
}

TEST_CASE("cli br enum") {
    RunResult r = run_cli("br enum abbc");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "abbc\nbbca\nbcab\nbcba\ncabb\ncbab\ncbba\n");

    RunResult annotated = run_cli("br enum abbc --annotate");
    CHECK(count_lines(annotated.output) == 7);
    CHECK(contains(annotated.output, "bcab\tnon-rich"));
    CHECK(contains(annotated.output, "abbc\trich"));
}

TEST_CASE("cli br count and member") {
    CHECK(run_cli("br count a^9").output == "1\n");
    CHECK(run_cli("br count abbc").output == "7\n");
    RunResult member = run_cli("br member abbc bcba");
    CHECK(member.exit_code == 0);
    CHECK(member.output == "true\n");
    CHECK(run_cli("br member abbc abcb").output == "false\n");
}

TEST_CASE("cli classify") {
    RunResult r = run_cli("classify abababab");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "verdict: AllRich"));
    CHECK(contains(r.output, "rule: BinaryL8Table"));
    CHECK(contains(r.output, "form: L8.abababab"));

    RunResult checked = run_cli("classify abbc --check");
    CHECK(checked.exit_code == 0);
    CHECK(contains(checked.output, "verdict: ExistsNonRich"));
    CHECK(contains(checked.output, "rule: NonBinaryRepeat"));
    CHECK(contains(checked.output, "oracle: ExistsNonRich"));
    CHECK(contains(checked.output, "oracle witness:"));
    CHECK(contains(checked.output, "agreement: yes"));

    CHECK(contains(run_cli("classify a^20").output, "rule: Unary"));
}

TEST_CASE("cli verify") {
    RunResult r = run_cli("verify --alphabet 2 --max-len 8 --format json");
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.output);
    CHECK(j.at("mismatches").empty());
    CHECK(j.at("words_checked").get<int>() == 510);
    CHECK(j.at("counts").size() == 8);
    CHECK(j.at("counts")[7].at("all_rich_count").get<int>() == 156);

    RunResult text = run_cli("verify --alphabet 3 --max-len 5");
    CHECK(text.exit_code == 0);
    CHECK(contains(text.output, "mismatches: 0"));
}

TEST_CASE("cli verify is jobs-invariant modulo wall time") {
    nlohmann::json a = nlohmann::json::parse(run_cli("verify --alphabet 2 --max-len 9 --jobs 1 --format json").output);
    nlohmann::json b = nlohmann::json::parse(run_cli("verify --alphabet 2 --max-len 9 --jobs 2 --format json").output);
    a.erase("wall_time_ms");
    b.erase("wall_time_ms");
    CHECK(a == b);
}

TEST_CASE("cli verify laws") {
    RunResult r = run_cli("verify --laws --samples 120 --seed 9");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "reversal law: 2046 words, 0 violations"));
    CHECK(contains(r.output, "concatenation law: 120 pairs (seed 9), 0 violations"));
    RunResult again = run_cli("verify --laws --samples 120 --seed 9");
    CHECK(again.output == r.output);
}

TEST_CASE("cli sequence") {
    RunResult r = run_cli("sequence --alphabet 2 --max-len 8 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "length,total_words,all_rich_count\n"
          "1,2,2\n2,4,4\n3,8,8\n4,16,16\n5,32,32\n6,64,64\n7,128,128\n8,256,156\n");
}

TEST_CASE("cli dump-forms") {
    RunResult r = run_cli("dump-forms");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "L8.abababab"));
    CHECK(contains(r.output, "L6.T.a^n1-babab"));
    CHECK(contains(r.output, "n1>=3"));
    CHECK(contains(r.output, "n2+n4=4"));
    CHECK(contains(r.output, "[RC]"));

    nlohmann::json j = nlohmann::json::parse(run_cli("dump-forms --format json").output);
    CHECK(j.is_array());
    CHECK(j.size() >= 40);
}

TEST_CASE("cli input errors exit with 2") {
    CHECK(run_cli("rle a^0").exit_code == 2);
    CHECK(run_cli("rich zx").exit_code == 2);
    CHECK(run_cli("pal 'a!!'").exit_code == 2);
    CHECK(run_cli("power aba x").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("cli resource limits exit with 3") {
    RunResult r = run_cli("br enum a^25");
    CHECK(r.exit_code == 3);
    CHECK(contains(r.output, "mask space 16777216"));
    CHECK(run_cli("br count a^25 --max-block-len 25").exit_code == 0);
    CHECK(run_cli("pal a^70").exit_code == 3);
}

TEST_CASE("cli honors the block-length environment variable") {
    CHECK(run_cli("br count a^2b^2a^2b^2a^2b^2", "BLORE_MAX_BLOCK_LEN=10").exit_code == 3);
    CHECK(run_cli("br count a^2b^2a^2b^2a^2b^2", "BLORE_MAX_BLOCK_LEN=12").exit_code == 0);
    // an explicit flag overrides the environment
    CHECK(run_cli("br count a^2b^2a^2b^2a^2b^2 --max-block-len 12", "BLORE_MAX_BLOCK_LEN=10").exit_code == 0);
}

TEST_CASE("cli writes reports to files") {
    std::string path = std::string(BLORE_CLI_PATH) + ".report.json";
    RunResult r = run_cli("verify --alphabet 2 --max-len 6 --format json --out " + path);
    CHECK(r.exit_code == 0);
    FILE* f = fopen(path.c_str(), "r");
    REQUIRE(f != nullptr);
    std::string content;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, f)) content.append(buf, n);
    fclose(f);
    std::remove(path.c_str());
    nlohmann::json j = nlohmann::json::parse(content);
    CHECK(j.at("mismatches").empty());
}
