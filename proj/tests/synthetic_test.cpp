#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "segtag/synthetic.hpp"

using namespace segtag;

TEST_CASE("synthetic corpus is deterministic in the seed") {
    Corpus a = generate_synthetic_corpus(1, 5);
    Corpus b = generate_synthetic_corpus(1, 5);
    CHECK(a == b);
    Corpus c = generate_synthetic_corpus(2, 5);
    CHECK_FALSE(a == c);
}

TEST_CASE("synthetic corpus emits requested sentence count") {
    CHECK(generate_synthetic_corpus(9, 1).sentences.size() == 1);
    CHECK(generate_synthetic_corpus(9, 250).sentences.size() == 250);
}

TEST_CASE("synthetic sentences survive parse/render round trip") {
    Corpus c = generate_synthetic_corpus(1, 200);
    CHECK(parse_corpus(render_corpus(c)) == c);
}

TEST_CASE("synthetic grammar properties") {
    Corpus c = generate_synthetic_corpus(3, 2000);

    std::set<std::string> tags;
    std::set<std::string> syllables;
    std::map<std::string, std::set<std::string>> type_tags;
    size_t max_len = 0, min_len = 99;
    for (const auto& s : c.sentences) {
        for (const auto& tw : s.items) {
            tags.insert(tw.tag.label);
            type_tags[tw.word.joined()].insert(tw.tag.label);
            max_len = std::max(max_len, tw.word.syllables.size());
            min_len = std::min(min_len, tw.word.syllables.size());
            for (const auto& syl : tw.word.syllables) syllables.insert(syl.text);
        }
    }
    CHECK(tags.size() >= 8);
    CHECK(syllables.size() >= 200);
    CHECK(min_len >= 1);
    CHECK(max_len <= 3);

    size_t ambiguous = 0;
    for (const auto& [surface, seen] : type_tags) {
        CHECK(seen.size() <= 2);
        if (seen.size() == 2) ++ambiguous;
    }
    CHECK(ambiguous * 10 >= type_tags.size());  // >= 10% of word types
}
