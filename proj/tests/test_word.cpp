#include <catch2/catch_amalgamated.hpp>

#include "blore/rational.hpp"
#include "blore/rle.hpp"
#include "blore/word.hpp"
#include "helpers.hpp"

using namespace blore;
using blore::testing::random_word;

TEST_CASE("parse_word handles plain and caret forms") {
    Word w = parse_word("abbc");
    CHECK(render_plain(w) == "abbc");
    CHECK(w.alphabet_size() == 3);
    CHECK(w.size() == 4);

    CHECK(render_plain(parse_word("a^2b^3a^3")) == "aabbbaaa");
    CHECK(render_plain(parse_word(" a^2 b^3\ta^3 ")) == "aabbbaaa");
    CHECK(parse_word("").empty());
    CHECK(parse_word("a^12").size() == 12);
    CHECK(render_plain(parse_word("a^2a^3")) == "aaaaa");
}

TEST_CASE("parse_word rejects malformed input") {
    CHECK_THROWS_AS(parse_word("a^0"), parse_error);
    CHECK_THROWS_AS(parse_word("a^"), parse_error);
    CHECK_THROWS_AS(parse_word("^2"), parse_error);
    CHECK_THROWS_AS(parse_word("aB"), parse_error);
    CHECK_THROWS_AS(parse_word("a2"), parse_error);
    CHECK_THROWS_AS(parse_word("a b!"), parse_error);
}

TEST_CASE("parse_word alphabet handling") {
    // without an explicit size the letters must form a contiguous prefix of a..z
    CHECK_THROWS_AS(parse_word("bc"), parse_error);
    CHECK_THROWS_AS(parse_word("abd"), parse_error);
    CHECK(parse_word("bc", 3).alphabet_size() == 3);
    CHECK(parse_word("abd", 4).size() == 3);
    CHECK_THROWS_AS(parse_word("abc", 2), parse_error);
    CHECK(parse_word("", 2).alphabet_size() == 2);
}

TEST_CASE("rendering round-trips through both forms") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        Word w = random_word(rng, 60);
        CHECK(parse_word(render_plain(w), w.alphabet_size()) == w);
        CHECK(parse_word(render_caret(w), w.alphabet_size()) == w);
        CHECK(parse_word(render(w), w.alphabet_size()) == w);
    }
    CHECK(render(parse_word("a^40")) == std::string(40, 'a'));
    CHECK(render(parse_word("a^41")) == "a^41");
}

TEST_CASE("reverse and complement are involutions") {
    CHECK(render_plain(reverse(parse_word("abbc"))) == "cbba");
    CHECK(reverse(parse_word("aba")) == parse_word("aba"));
    CHECK(reverse(Word()) == Word());

    CHECK(render_plain(complement(parse_word("ababb"))) == "babaa");
    CHECK(render_plain(complement(parse_word("aabb"))) == "bbaa");
    CHECK(complement(Word()) == Word());
    CHECK_THROWS_AS(complement(parse_word("abc")), std::invalid_argument);
    CHECK_THROWS_AS(complement(parse_word("aa")), std::invalid_argument);  // unary alphabet
    CHECK(render_plain(complement(parse_word("aa", 2))) == "bb");

    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        Word w = random_word(rng, 24);
        CHECK(reverse(reverse(w)) == w);
        if (w.alphabet_size() == 2) CHECK(complement(complement(w)) == w);
    }
}

TEST_CASE("run-length encoding") {
    RunLengthEncoding r = rle(parse_word("aabbbaaa"));
    REQUIRE(r.run_count() == 3);
    CHECK(r.runs()[0] == Run{0, 2});
    CHECK(r.runs()[1] == Run{1, 3});
    CHECK(r.runs()[2] == Run{0, 3});

    CHECK(rle(parse_word("abababab")).run_count() == 8);
    CHECK(rle(parse_word("a^5")).run_count() == 1);
    CHECK_THROWS_AS(rle(Word()), std::invalid_argument);
}

TEST_CASE("trace and run sequence") {
    CHECK(render_plain(trace(rle(parse_word("a^2b^3a^3")))) == "aba");
    CHECK(render_plain(trace(rle(parse_word("aba")))) == "aba");
    CHECK(render_plain(trace(rle(parse_word("ababb")))) == "abab");

    CHECK(run_sequence(rle(parse_word("a^2b^3a^3"))) == std::vector<int>{2, 3, 3});
    CHECK(run_sequence(rle(parse_word("a"))) == std::vector<int>{1});
    CHECK(run_sequence(rle(parse_word("a^2b^3a^3ba"))) == std::vector<int>{2, 3, 3, 1, 1});
}

TEST_CASE("run_length") {
    CHECK(run_length(parse_word("abababab")) == 8);
    CHECK(run_length(parse_word("a^2b^3a^3")) == 3);
    CHECK(run_length(Word()) == 0);
}

TEST_CASE("rle expansion is the inverse of rle") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 300; ++i) {
        Word w = random_word(rng, 32);
        if (w.empty()) continue;
        RunLengthEncoding r = rle(w);
        CHECK(r.expand() == w);
        CHECK(static_cast<int>(run_sequence(r).size()) == run_length(w));
    }
    CHECK_THROWS_AS(RunLengthEncoding({{0, 1}, {0, 2}}, 1), std::invalid_argument);
    CHECK_THROWS_AS(RunLengthEncoding({{0, 0}}, 1), std::invalid_argument);
}

TEST_CASE("factors") {
    auto to_strings = [](const std::vector<Word>& ws) {
        std::vector<std::string> out;
        for (const Word& w : ws) out.push_back(render_plain(w));
        return out;
    };
    CHECK(to_strings(factors(parse_word("ab"))) == std::vector<std::string>{"", "a", "ab", "b"});
    CHECK(to_strings(factors(parse_word("aaa"))) == std::vector<std::string>{"", "a", "aa", "aaa"});
    CHECK(factors(parse_word("abbc")).size() == 10);  // 9 non-empty factors plus the empty word
    CHECK(factors(Word()).size() == 1);
}

TEST_CASE("conjugates") {
    auto to_strings = [](const std::vector<Word>& ws) {
        std::vector<std::string> out;
        for (const Word& w : ws) out.push_back(render_plain(w));
        return out;
    };
    CHECK(to_strings(conjugates(parse_word("ab"))) == std::vector<std::string>{"ab", "ba"});
    CHECK(to_strings(conjugates(parse_word("aa"))) == std::vector<std::string>{"aa"});
    CHECK(conjugates(parse_word("abbaba")).size() == 6);

    std::mt19937_64 rng(17);
    for (int i = 0; i < 200; ++i) {
        Word w = random_word(rng, 16);
        auto rotations = conjugates(w);
        for (const Word& c : rotations) CHECK(abelian_equivalent(c, w));
        if (!w.empty()) CHECK(w.size() % rotations.size() == 0);
    }
}

TEST_CASE("alphabet and letter counts") {
    CHECK(alph(parse_word("abbc")) == std::vector<Letter>{0, 1, 2});
    CHECK(alph(Word()).empty());
    CHECK(alph(parse_word("a^9")) == std::vector<Letter>{0});

    CHECK(letter_count(parse_word("abbc"), 1) == 2);
    CHECK(letter_count(Word(), 0) == 0);
    CHECK(letter_count(parse_word("a^2b^3a^3"), 0) == 5);
}

TEST_CASE("abelian equivalence") {
    CHECK(abelian_equivalent(parse_word("abbc"), parse_word("bcba")));
    CHECK_FALSE(abelian_equivalent(parse_word("ab"), parse_word("aa", 2)));
    CHECK(abelian_equivalent(Word(), Word()));
}

TEST_CASE("fractional powers") {
    CHECK(render_plain(fractional_power(parse_word("aba"), Rational(5, 3))) == "abaab");
    CHECK(render_plain(fractional_power(parse_word("ab"), Rational(1, 1))) == "ab");
    CHECK(render_plain(fractional_power(parse_word("abbaba"), Rational(9, 6))) == "abbabaabb");

    CHECK_THROWS_AS(fractional_power(Word(), Rational(2, 1)), std::invalid_argument);
    CHECK_THROWS_AS(fractional_power(parse_word("ab"), Rational(1, 2)), std::invalid_argument);

    std::mt19937_64 rng(19);
    for (int i = 0; i < 200; ++i) {
        Word u = random_word(rng, 10);
        if (u.empty()) continue;
        long long num = 1 + static_cast<long long>(rng() % 40);
        long long den = 1 + static_cast<long long>(rng() % 10);
        if (num < den) std::swap(num, den);
        Rational k(num, den);
        Word p = fractional_power(u, k);
        auto expected_len = (static_cast<unsigned long long>(k.num) * u.size() + k.den - 1) / k.den;
        CHECK(p.size() == expected_len);
        for (std::size_t j = 0; j < p.size(); ++j) CHECK(p[j] == u[j % u.size()]);
        int m = 1 + static_cast<int>(rng() % 4);
        Word power = fractional_power(u, Rational(static_cast<long long>(u.size()) * m, static_cast<long long>(u.size())));
        CHECK(power.size() == u.size() * static_cast<std::size_t>(m));
    }
}

TEST_CASE("rationals normalize to lowest terms") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(5, 1).den == 1);
    CHECK_THROWS_AS(Rational(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(Rational(3, 0), std::invalid_argument);

    CHECK(parse_rational("5/3") == Rational(5, 3));
    CHECK(parse_rational("7") == Rational(7, 1));
    CHECK_THROWS_AS(parse_rational("5/3/2"), parse_error);
    CHECK_THROWS_AS(parse_rational("x"), parse_error);
    CHECK_THROWS_AS(parse_rational("-1/2"), parse_error);
    CHECK_THROWS_AS(parse_rational("0/2"), parse_error);
}

TEST_CASE("word ordering and hashing") {
    CHECK(parse_word("ab") < parse_word("b", 2));
    CHECK(parse_word("a") < parse_word("ab"));
    CHECK(std::hash<Word>{}(parse_word("abbc")) == std::hash<Word>{}(parse_word("abbc", 4)));
    CHECK(parse_word("abbc") == parse_word("abbc", 4));  // equality is on letters
}
