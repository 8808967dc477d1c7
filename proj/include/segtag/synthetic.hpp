#pragma once

// Deterministic toy corpus for tests and demos. Stands in for licensed
// treebank data: big enough tag set, 1-3 syllable words, and a slice of
// word types whose tag depends on the left context, so a lexicon lookup
// cannot reach 100% but a contextual tagger can.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "segtag/corpus.hpp"
#include "segtag/unicode.hpp"
#include "segtag/util.hpp"

namespace segtag {

namespace synth_detail {

struct WordType {
    std::string surface;  // underscore-joined
    std::string tag;
};

struct Grammar {
    std::vector<std::string> syllable_pool;
    // tag -> unambiguous surfaces
    std::map<std::string, std::vector<std::string>> plain;
    // surfaces readable as N or V (V after P/R/N/Np, N otherwise)
    std::vector<std::string> amb_nv;
    // surfaces readable as N or A (A after N, N otherwise)
    std::vector<std::string> amb_na;
    std::vector<std::vector<std::string>> templates;
};

inline std::string nv_reading(const std::string& prev_tag) {
    if (prev_tag == "P" || prev_tag == "R" || prev_tag == "N" || prev_tag == "Np") return "V";
    return "N";
}

inline std::string na_reading(const std::string& prev_tag) {
    return prev_tag == "N" ? "A" : "N";
}

inline Grammar build_grammar(Rng& rng) {
    Grammar g;
    static const char* onsets[] = {"b",  "c",  "ch", "d",  "đ",  "g",  "h",  "k",
                                   "kh", "l",  "m",  "n",  "ng", "nh", "ph", "qu",
                                   "r",  "s",  "t",  "th", "tr", "v",  "x",  "gi"};
    static const char* nuclei[] = {"a", "à", "á", "ạ", "ă", "â", "e", "é", "ê", "i", "í", "o",
                                   "ó", "ô", "ơ", "u", "ú", "ư", "y", "ai", "ao", "ươ", "iê", "uô"};
    std::set<std::string> distinct;
    for (const char* on : onsets)
        for (const char* nu : nuclei) distinct.insert(nfc(std::string(on) + nu));
    std::vector<std::string> all(distinct.begin(), distinct.end());
    rng.shuffle(all);
    g.syllable_pool.assign(all.begin(), all.begin() + 300);

    std::set<std::string> used;
    size_t cursor = 0;
    auto make_surface = [&](int len) {
        // Cycle the pool for the first syllable so the grammar provably uses
        // well over 200 distinct syllables.
        while (true) {
            std::string s = g.syllable_pool[cursor % g.syllable_pool.size()];
            ++cursor;
            for (int k = 1; k < len; ++k) s += "_" + rng.pick(g.syllable_pool);
            if (used.insert(s).second) return s;
        }
    };
    auto make_types = [&](const std::string& tag, int count) {
        auto& v = g.plain[tag];
        for (int i = 0; i < count; ++i) {
            int r = rng.range(0, 9);
            int len = r < 4 ? 1 : (r < 8 ? 2 : 3);
            v.push_back(make_surface(len));
        }
    };
    make_types("N", 60);
    make_types("V", 50);
    make_types("A", 30);
    make_types("Np", 20);
    make_types("Nc", 8);
    make_types("P", 10);
    make_types("R", 12);
    make_types("M", 10);
    make_types("E", 8);
    make_types("C", 8);
    g.plain["CH"] = {".", ",", "?", "!", ":", ";"};

    // Carve the ambiguous slice out of N: those surfaces stay in the N list
    // and gain a context-dependent second reading.
    auto& nouns = g.plain["N"];
    g.amb_nv.assign(nouns.begin(), nouns.begin() + 20);
    g.amb_na.assign(nouns.begin() + 20, nouns.begin() + 32);

    g.templates = {
        {"P", "V", "N", "CH"},
        {"M", "Nc", "N", "A", "CH"},
        {"N", "V", "M", "N", "CH"},
        {"Np", "V", "E", "N", "CH"},
        {"P", "R", "V", "N", "A", "CH"},
        {"M", "N", "C", "N", "V", "A", "CH"},
        {"Nc", "N", "V", "P", "CH"},
        {"N", "A", "C", "N", "A", "CH"},
    };
    return g;
}

}  // namespace synth_detail

inline Corpus generate_synthetic_corpus(uint64_t seed, size_t n_sentences) {
    using namespace synth_detail;
    if (n_sentences < 1) throw ConfigError("n_sentences must be at least 1");
    Rng rng(seed);
    Grammar g = build_grammar(rng);

    Corpus corpus;
    corpus.sentences.reserve(n_sentences);
    for (size_t si = 0; si < n_sentences; ++si) {
        const auto& tmpl = rng.pick(g.templates);
        std::vector<TaggedWord> items;
        std::string prev_tag = "";  // sentence start
        for (const auto& slot : tmpl) {
            std::vector<const std::string*> pool;
            for (const auto& s : g.plain.at(slot)) pool.push_back(&s);
            if (slot == "V" && nv_reading(prev_tag) == "V")
                for (const auto& s : g.amb_nv) pool.push_back(&s);
            if (slot == "A" && na_reading(prev_tag) == "A")
                for (const auto& s : g.amb_na) pool.push_back(&s);
            // Ambiguous forms sit inside the N list already; drop the ones
            // whose reading in this context is not N.
            if (slot == "N") {
                std::erase_if(pool, [&](const std::string* s) {
                    for (const auto& a : g.amb_nv)
                        if (*s == a) return nv_reading(prev_tag) != "N";
                    for (const auto& a : g.amb_na)
                        if (*s == a) return na_reading(prev_tag) != "N";
                    return false;
                });
            }
            const std::string& surface = *pool[rng.below(pool.size())];
            std::vector<Syllable> syllables;
            size_t start = 0;
            while (true) {
                size_t us = surface.find('_', start);
                syllables.emplace_back(us == std::string::npos ? surface.substr(start)
                                                               : surface.substr(start, us - start));
                if (us == std::string::npos) break;
                start = us + 1;
            }
            items.push_back(TaggedWord{Word(std::move(syllables)), PosTag(slot)});
            prev_tag = slot;
        }
        corpus.sentences.emplace_back(std::move(items));
    }
    return corpus;
}

}  // namespace segtag
