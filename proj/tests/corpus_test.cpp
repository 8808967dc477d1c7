#include <catch2/catch_amalgamated.hpp>

#include "segtag/corpus.hpp"
#include "test_helpers.hpp"

using namespace segtag;
using test_helpers::random_corpus;
using test_helpers::random_word_sentence;

static const char* kJointExample =
    "Cuộc/Nc điều_tra/V dường_như/X không/R tiến_triển/V ./CH";

TEST_CASE("parse_corpus basic sentence") {
    Corpus c = parse_corpus("Cuộc/Nc điều_tra/V ./CH");
    REQUIRE(c.sentences.size() == 1);
    const auto& s = c.sentences[0];
    REQUIRE(s.items.size() == 3);
    CHECK(s.items[0].word.joined() == "Cuộc");
    CHECK(s.items[0].tag.label == "Nc");
    REQUIRE(s.items[1].word.syllables.size() == 2);
    CHECK(s.items[1].word.syllables[0].text == "điều");
    CHECK(s.items[1].word.syllables[1].text == "tra");
    CHECK(s.items[1].tag.label == "V");
    CHECK(s.items[2].word.joined() == ".");
    CHECK(s.items[2].tag.label == "CH");
}

TEST_CASE("parse_corpus minimal input") {
    Corpus c = parse_corpus("a/X");
    REQUIRE(c.sentences.size() == 1);
    CHECK(c.sentences[0].items.size() == 1);
    CHECK(c.sentences[0].items[0].word.syllables.size() == 1);
}

TEST_CASE("parse_corpus malformed tokens") {
    CHECK_THROWS_WITH(parse_corpus("a/X b"),
                      Catch::Matchers::ContainsSubstring("line 1") &&
                          Catch::Matchers::ContainsSubstring("token 2") &&
                          Catch::Matchers::ContainsSubstring("no '/'"));
    CHECK_THROWS_WITH(parse_corpus("/X"), Catch::Matchers::ContainsSubstring("empty word"));
    CHECK_THROWS_WITH(parse_corpus("a/"), Catch::Matchers::ContainsSubstring("empty tag"));
    CHECK_THROWS_WITH(parse_corpus("a/B_C"), Catch::Matchers::ContainsSubstring("contains '_'"));
    CHECK_THROWS_AS(parse_corpus("a__b/X"), ParseError);  // empty syllable
    CHECK_THROWS_AS(parse_corpus("a/B-C"), ParseError);   // '-' not allowed in word-level tags
}

TEST_CASE("parse_corpus error names line and column") {
    // Second line, third token at code-point column 12 (1-based).
    CHECK_THROWS_WITH(parse_corpus("a/X b/Y\năn/V cơm/N xyz\n"),
                      Catch::Matchers::ContainsSubstring("line 2, column 12 (token 3)"));
}

TEST_CASE("parse_corpus skips blank lines, rejects blank document") {
    Corpus c = parse_corpus("\n\na/X\n   \nb/Y\n\n");
    CHECK(c.sentences.size() == 2);
    CHECK_THROWS_WITH(parse_corpus(""), Catch::Matchers::ContainsSubstring("empty corpus"));
    CHECK_THROWS_WITH(parse_corpus("\n  \n"), Catch::Matchers::ContainsSubstring("empty corpus"));
}

TEST_CASE("parse_corpus normalizes to NFC") {
    // "tiến" spelled with combining marks parses equal to the precomposed form.
    Corpus decomposed = parse_corpus("tiến/V");
    Corpus composed = parse_corpus("tiến/V");
    CHECK(decomposed == composed);
}

TEST_CASE("parse_corpus splits at the last slash") {
    Corpus c = parse_corpus("a/b/X");
    CHECK(c.sentences[0].items[0].word.joined() == "a/b");
    CHECK(c.sentences[0].items[0].tag.label == "X");
}

TEST_CASE("render_corpus round trips the joint example byte for byte") {
    std::string doc = std::string(kJointExample) + "\n";
    Corpus c = parse_corpus(doc);
    CHECK(render_corpus(c) == doc);
}

TEST_CASE("render_corpus rejects empty corpus, keeps one line per sentence") {
    CHECK_THROWS_AS(render_corpus(Corpus{}), ParseError);
    Corpus c = parse_corpus("a/X\nb/Y c/Z\n");
    std::string out = render_corpus(c);
    CHECK(out == "a/X\nb/Y c/Z\n");
}

TEST_CASE("to_syllable_repr on the paper-style sentence") {
    Corpus c = parse_corpus(kJointExample);
    SyllableSentence s = to_syllable_repr(c.sentences[0]);
    CHECK(render_syllable_sentence(s) ==
          "Cuộc/B-Nc điều/B-V tra/I-V dường/B-X như/I-X không/B-R tiến/B-V triển/I-V ./B-CH");
}

TEST_CASE("to_syllable_repr single syllable word") {
    Corpus c = parse_corpus("không/R");
    CHECK(render_syllable_sentence(to_syllable_repr(c.sentences[0])) == "không/B-R");
}

TEST_CASE("from_syllable_repr collapses runs") {
    auto sents = parse_syllable_corpus("thuế/B-N thu/I-N nhập/I-N cá/B-N nhân/I-N");
    WordSentence w = from_syllable_repr(sents[0]);
    CHECK(render_sentence(w) == "thuế_thu_nhập/N cá_nhân/N");

    auto one = parse_syllable_corpus("a/B-X");
    CHECK(render_sentence(from_syllable_repr(one[0])) == "a/X");
}

TEST_CASE("ill-formed syllable sequences are an error") {
    CHECK_THROWS_WITH(parse_syllable_corpus("a/I-X b/B-Y"),
                      Catch::Matchers::ContainsSubstring("ill-formed tag sequence at position 0"));
    CHECK_THROWS_WITH(parse_syllable_corpus("a/B-X b/I-Y"),
                      Catch::Matchers::ContainsSubstring("ill-formed tag sequence at position 1"));
}

TEST_CASE("round trip word -> syllable -> word") {
    Rng rng(42);
    for (int trial = 0; trial < 500; ++trial) {
        WordSentence s = random_word_sentence(rng);
        CHECK(from_syllable_repr(to_syllable_repr(s)) == s);
    }
}

TEST_CASE("length conservation and B-count identity") {
    Rng rng(43);
    for (int trial = 0; trial < 200; ++trial) {
        WordSentence s = random_word_sentence(rng);
        SyllableSentence syl = to_syllable_repr(s);
        CHECK(syl.items.size() == s.syllable_count());
        CHECK(syl.items.size() == strip_segmentation(s).size());
        size_t b_count = 0;
        for (const auto& it : syl.items)
            if (it.tag.seg == SegTag::B) ++b_count;
        CHECK(b_count == s.items.size());
    }
}

TEST_CASE("parse and render are inverse on random corpora") {
    Rng rng(44);
    for (int trial = 0; trial < 50; ++trial) {
        Corpus c = random_corpus(rng, rng.range(1, 10));
        CHECK(parse_corpus(render_corpus(c)) == c);
    }
}

TEST_CASE("syllable corpus parse/render inverse") {
    Rng rng(45);
    std::vector<SyllableSentence> sents;
    for (int i = 0; i < 20; ++i) sents.push_back(to_syllable_repr(random_word_sentence(rng)));
    CHECK(parse_syllable_corpus(render_syllable_corpus(sents)) == sents);
}

TEST_CASE("combined tag parse inverts render") {
    for (const char* tag : {"B-Nc", "I-V", "B-CH", "I-X"}) {
        CHECK(CombinedTag::parse(tag).render() == tag);
    }
    CHECK_THROWS_AS(CombinedTag::parse("Q-N"), ParseError);
    CHECK_THROWS_AS(CombinedTag::parse("B-"), ParseError);
    CHECK_THROWS_AS(CombinedTag::parse("BN"), ParseError);
}

TEST_CASE("split_dataset takes first n_train and last n_dev") {
    Corpus big;
    for (int i = 0; i < 27870; ++i)
        big.sentences.push_back(parse_corpus("a" + std::to_string(i % 97) + "/X").sentences[0]);
    DatasetSplit split = split_dataset(big, 27000, 870);
    CHECK(split.train.sentences.size() == 27000);
    CHECK(split.dev.sentences.size() == 870);
    CHECK(split.train.sentences.front() == big.sentences.front());
    CHECK(split.dev.sentences.back() == big.sentences.back());

    Corpus two = parse_corpus("a/X\nb/Y\n");
    DatasetSplit s2 = split_dataset(two, 1, 1);
    CHECK(s2.train.sentences[0] == two.sentences[0]);
    CHECK(s2.dev.sentences[0] == two.sentences[1]);
}

TEST_CASE("split_dataset reports all three numbers on mismatch") {
    Corpus c;
    for (int i = 0; i < 10; ++i) c.sentences.push_back(parse_corpus("a/X").sentences[0]);
    CHECK_THROWS_WITH(split_dataset(c, 8, 3),
                      Catch::Matchers::ContainsSubstring("8") &&
                          Catch::Matchers::ContainsSubstring("3") &&
                          Catch::Matchers::ContainsSubstring("10"));
}

TEST_CASE("strip_segmentation flattens syllables") {
    Corpus c = parse_corpus("thuế_thu_nhập/N cá_nhân/N");
    auto syls = strip_segmentation(c.sentences[0]);
    REQUIRE(syls.size() == 5);
    CHECK(syls[0].text == "thuế");
    CHECK(syls[2].text == "nhập");
    CHECK(syls[4].text == "nhân");

    auto one = strip_segmentation(parse_corpus("a/X").sentences[0]);
    CHECK(one.size() == 1);
}

TEST_CASE("raw line parsing") {
    auto lines = parse_raw_lines("thuế thu nhập cá nhân\n\nxe máy\n");
    REQUIRE(lines.size() == 2);
    CHECK(lines[0].size() == 5);
    CHECK(lines[1].size() == 2);
    CHECK(parse_raw_lines("").empty());
    CHECK_THROWS_AS(parse_raw_lines("a_b c"), ParseError);
}
