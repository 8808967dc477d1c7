#pragma once

#include <string>
#include <vector>

#include "segtag/corpus.hpp"
#include "segtag/util.hpp"

namespace test_helpers {

inline const std::vector<std::string>& syllable_pool() {
    static const std::vector<std::string> pool = {
        "a",   "b",    "an",   "em",   "thuế", "thu",  "nhập", "cá",  "nhân", "cuộc",
        "điều", "tra",  "dường", "như",  "không", "tiến", "triển", ".",   ",",    "?",
        "xe",  "máy",  "người", "việt", "nam",  "hà",   "nội",  "đi",  "về",   "nhà",
        "123", "x9",   "ơn",   "ưu",   "giá",  "trị",  "quyết", "định", "rất",  "đẹp"};
    return pool;
}

inline const std::vector<std::string>& tag_pool() {
    static const std::vector<std::string> pool = {"N", "V", "A", "P", "R", "M",
                                                  "E", "C", "Nc", "Np", "X", "CH"};
    return pool;
}

inline segtag::WordSentence random_word_sentence(segtag::Rng& rng, int max_words = 8,
                                                 int max_syllables = 4) {
    int n_words = rng.range(1, max_words);
    std::vector<segtag::TaggedWord> items;
    for (int w = 0; w < n_words; ++w) {
        int len = rng.range(1, max_syllables);
        std::vector<segtag::Syllable> syls;
        for (int k = 0; k < len; ++k) syls.emplace_back(rng.pick(syllable_pool()));
        items.push_back(segtag::TaggedWord{segtag::Word(std::move(syls)),
                                           segtag::PosTag(rng.pick(tag_pool()))});
    }
    return segtag::WordSentence(std::move(items));
}

inline segtag::Corpus random_corpus(segtag::Rng& rng, int n_sentences) {
    segtag::Corpus c;
    for (int i = 0; i < n_sentences; ++i) c.sentences.push_back(random_word_sentence(rng));
    return c;
}

}  // namespace test_helpers
