#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "segtag/error.hpp"
#include "segtag/unicode.hpp"
#include "segtag/util.hpp"

namespace segtag {

// The orthographic unit: whitespace-delimited in raw text, underscore-joined
// inside words. Must not contain space, tab, underscore, or line breaks.
struct Syllable {
    std::string text;

    explicit Syllable(std::string t) : text(std::move(t)) {
        if (text.empty()) throw ParseError("empty syllable");
        for (char c : text) {
            if (c == ' ' || c == '\t' || c == '_' || c == '\n' || c == '\r')
                throw ParseError("syllable '" + text + "' contains whitespace or underscore");
        }
    }
    bool operator==(const Syllable&) const = default;
};

struct PosTag {
    std::string label;

    explicit PosTag(std::string l) : label(std::move(l)) {
        if (label.empty()) throw ParseError("empty POS tag");
        for (char c : label) {
            bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
            if (!ok) throw ParseError("POS tag '" + label + "' has characters outside [A-Za-z0-9]");
        }
    }
    bool operator==(const PosTag&) const = default;
};

enum class SegTag : uint8_t { B, I };

struct CombinedTag {
    SegTag seg;
    PosTag pos;

    std::string render() const {
        return (seg == SegTag::B ? std::string("B-") : std::string("I-")) + pos.label;
    }
    static CombinedTag parse(std::string_view s) {
        if (s.size() < 3 || (s[0] != 'B' && s[0] != 'I') || s[1] != '-')
            throw ParseError("combined tag '" + std::string(s) + "' is not of the form B-X or I-X");
        return CombinedTag{s[0] == 'B' ? SegTag::B : SegTag::I, PosTag(std::string(s.substr(2)))};
    }
    bool operator==(const CombinedTag&) const = default;
};

struct Word {
    std::vector<Syllable> syllables;

    explicit Word(std::vector<Syllable> s) : syllables(std::move(s)) {
        if (syllables.empty()) throw ParseError("word with no syllables");
    }
    // Underscore-joined surface form.
    std::string joined() const {
        std::string out;
        for (size_t i = 0; i < syllables.size(); ++i) {
            if (i) out += '_';
            out += syllables[i].text;
        }
        return out;
    }
    bool operator==(const Word&) const = default;
};

struct TaggedWord {
    Word word;
    PosTag tag;
    bool operator==(const TaggedWord&) const = default;
};

struct WordSentence {
    std::vector<TaggedWord> items;

    explicit WordSentence(std::vector<TaggedWord> i) : items(std::move(i)) {
        if (items.empty()) throw ParseError("empty sentence");
    }
    size_t syllable_count() const {
        size_t n = 0;
        for (const auto& it : items) n += it.word.syllables.size();
        return n;
    }
    bool operator==(const WordSentence&) const = default;
};

struct TaggedSyllable {
    Syllable syllable;
    CombinedTag tag;
    bool operator==(const TaggedSyllable&) const = default;
};

// Well-formed syllable-level sentence: starts with B, every I continues the
// preceding POS. Raw model output is a label sequence, not this type; it goes
// through repair_tag_sequence before landing here.
struct SyllableSentence {
    std::vector<TaggedSyllable> items;

    explicit SyllableSentence(std::vector<TaggedSyllable> i) : items(std::move(i)) {
        if (items.empty()) throw ParseError("empty sentence");
        if (items[0].tag.seg == SegTag::I) throw ParseError("ill-formed tag sequence at position 0");
        for (size_t k = 1; k < items.size(); ++k) {
            if (items[k].tag.seg == SegTag::I && items[k].tag.pos != items[k - 1].tag.pos)
                throw ParseError("ill-formed tag sequence at position " + std::to_string(k));
        }
    }
    bool operator==(const SyllableSentence&) const = default;
};

struct Corpus {
    std::vector<WordSentence> sentences;
    bool operator==(const Corpus&) const = default;
};

struct DatasetSplit {
    Corpus train;
    Corpus dev;
    Corpus test;  // may be empty
};

namespace detail {

inline ParseError token_error(size_t line_no, size_t col, size_t tok_no, const std::string& what) {
    return ParseError("line " + std::to_string(line_no) + ", column " + std::to_string(col) +
                      " (token " + std::to_string(tok_no) + "): " + what);
}

// Splits "word/TAG" at the last slash; both halves must be non-empty.
inline TaggedWord parse_word_token(std::string_view tok, size_t line_no, size_t col,
                                   size_t tok_no) {
    size_t slash = tok.rfind('/');
    if (slash == std::string_view::npos)
        throw token_error(line_no, col, tok_no,
                          "token '" + std::string(tok) + "' has no '/' tag separator");
    std::string_view word_part = tok.substr(0, slash);
    std::string_view tag_part = tok.substr(slash + 1);
    if (word_part.empty())
        throw token_error(line_no, col, tok_no, "empty word before '/' in '" + std::string(tok) + "'");
    if (tag_part.empty())
        throw token_error(line_no, col, tok_no, "empty tag after '/' in '" + std::string(tok) + "'");
    if (tag_part.find('_') != std::string_view::npos)
        throw token_error(line_no, col, tok_no, "tag '" + std::string(tag_part) + "' contains '_'");
    try {
        std::vector<Syllable> syllables;
        size_t start = 0;
        while (true) {
            size_t us = word_part.find('_', start);
            std::string_view piece =
                us == std::string_view::npos ? word_part.substr(start) : word_part.substr(start, us - start);
            syllables.emplace_back(std::string(piece));
            if (us == std::string_view::npos) break;
            start = us + 1;
        }
        return TaggedWord{Word(std::move(syllables)), PosTag(std::string(tag_part))};
    } catch (const ParseError& e) {
        throw token_error(line_no, col, tok_no, e.what());
    }
}

template <typename LineFn>
inline void for_each_line(std::string_view text, LineFn&& fn) {
    size_t line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        std::string_view raw =
            nl == std::string_view::npos ? text.substr(pos) : text.substr(pos, nl - pos);
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
        ++line_no;
        fn(line_no, raw);
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
}

}  // namespace detail

// One sentence per line, "word/TAG" tokens, underscore joins syllables.
// Input is normalized to NFC; blank lines are skipped; a document with no
// sentences is an error.
inline Corpus parse_corpus(std::string_view text) {
    Corpus corpus;
    detail::for_each_line(text, [&](size_t line_no, std::string_view raw) {
        std::string line = nfc(raw);
        auto tokens = split_ws(line);
        if (tokens.empty()) return;
        std::vector<TaggedWord> items;
        items.reserve(tokens.size());
        for (size_t t = 0; t < tokens.size(); ++t) {
            size_t byte_off = static_cast<size_t>(tokens[t].data() - line.data());
            size_t col = code_point_count(std::string_view(line).substr(0, byte_off)) + 1;
            items.push_back(detail::parse_word_token(tokens[t], line_no, col, t + 1));
        }
        corpus.sentences.emplace_back(std::move(items));
    });
    if (corpus.sentences.empty()) throw ParseError("empty corpus");
    return corpus;
}

inline std::string render_sentence(const WordSentence& s) {
    std::string out;
    for (size_t i = 0; i < s.items.size(); ++i) {
        if (i) out += ' ';
        out += s.items[i].word.joined();
        out += '/';
        out += s.items[i].tag.label;
    }
    return out;
}

// Exact inverse of parse_corpus up to single-space separation and a trailing
// newline on every line.
inline std::string render_corpus(const Corpus& c) {
    if (c.sentences.empty()) throw ParseError("empty corpus");
    std::string out;
    for (const auto& s : c.sentences) {
        out += render_sentence(s);
        out += '\n';
    }
    return out;
}

// Word-level -> syllable-level: an n-syllable word with tag x becomes
// B-x I-x ... I-x.
inline SyllableSentence to_syllable_repr(const WordSentence& s) {
    std::vector<TaggedSyllable> items;
    items.reserve(s.syllable_count());
    for (const auto& tw : s.items) {
        for (size_t k = 0; k < tw.word.syllables.size(); ++k) {
            items.push_back(TaggedSyllable{tw.word.syllables[k],
                                           CombinedTag{k == 0 ? SegTag::B : SegTag::I, tw.tag}});
        }
    }
    return SyllableSentence(std::move(items));
}

// Syllable-level -> word-level: maximal B-x I-x ... runs collapse into one
// word tagged x. Inverse of to_syllable_repr on well-formed input; ill-formed
// gold data is an error (construction of the argument already enforces it).
inline WordSentence from_syllable_repr(const SyllableSentence& s) {
    std::vector<TaggedWord> items;
    std::vector<Syllable> current;
    for (size_t k = 0; k < s.items.size(); ++k) {
        const auto& it = s.items[k];
        if (it.tag.seg == SegTag::B) {
            if (!current.empty())
                items.push_back(TaggedWord{Word(std::move(current)), s.items[k - 1].tag.pos});
            current.clear();
        }
        current.push_back(it.syllable);
    }
    items.push_back(TaggedWord{Word(std::move(current)), s.items.back().tag.pos});
    return WordSentence(std::move(items));
}

// First n_train sentences for training, last n_dev for development.
inline DatasetSplit split_dataset(const Corpus& c, size_t n_train, size_t n_dev) {
    if (n_train < 1 || n_dev < 1) throw ConfigError("split counts must be at least 1");
    if (n_train + n_dev != c.sentences.size())
        throw ConfigError("split counts " + std::to_string(n_train) + "+" + std::to_string(n_dev) +
                          " != " + std::to_string(c.sentences.size()) + " sentences");
    DatasetSplit out;
    out.train.sentences.assign(c.sentences.begin(), c.sentences.begin() + n_train);
    out.dev.sentences.assign(c.sentences.begin() + n_train, c.sentences.end());
    return out;
}

// Drops tags and word boundaries, leaving the raw syllable sequence.
inline std::vector<Syllable> strip_segmentation(const WordSentence& s) {
    std::vector<Syllable> out;
    out.reserve(s.syllable_count());
    for (const auto& tw : s.items)
        for (const auto& syl : tw.word.syllables) out.push_back(syl);
    return out;
}

inline std::string render_syllable_sentence(const SyllableSentence& s) {
    std::string out;
    for (size_t i = 0; i < s.items.size(); ++i) {
        if (i) out += ' ';
        out += s.items[i].syllable.text;
        out += '/';
        out += s.items[i].tag.render();
    }
    return out;
}

// Syllable-level corpus file: "syllable/B-TAG" tokens, same line conventions
// as the word-level format. For gold data, so well-formedness is enforced.
inline std::vector<SyllableSentence> parse_syllable_corpus(std::string_view text) {
    std::vector<SyllableSentence> out;
    detail::for_each_line(text, [&](size_t line_no, std::string_view raw) {
        std::string line = nfc(raw);
        auto tokens = split_ws(line);
        if (tokens.empty()) return;
        std::vector<TaggedSyllable> items;
        items.reserve(tokens.size());
        for (size_t t = 0; t < tokens.size(); ++t) {
            size_t byte_off = static_cast<size_t>(tokens[t].data() - line.data());
            size_t col = code_point_count(std::string_view(line).substr(0, byte_off)) + 1;
            size_t slash = tokens[t].rfind('/');
            if (slash == std::string_view::npos || slash == 0 || slash + 1 == tokens[t].size())
                throw detail::token_error(line_no, col, t + 1,
                                          "token '" + std::string(tokens[t]) +
                                              "' is not of the form syllable/B-TAG");
            try {
                items.push_back(TaggedSyllable{Syllable(std::string(tokens[t].substr(0, slash))),
                                               CombinedTag::parse(tokens[t].substr(slash + 1))});
            } catch (const ParseError& e) {
                throw detail::token_error(line_no, col, t + 1, e.what());
            }
        }
        try {
            out.emplace_back(std::move(items));
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
        }
    });
    if (out.empty()) throw ParseError("empty corpus");
    return out;
}

inline std::string render_syllable_corpus(const std::vector<SyllableSentence>& sents) {
    if (sents.empty()) throw ParseError("empty corpus");
    std::string out;
    for (const auto& s : sents) {
        out += render_syllable_sentence(s);
        out += '\n';
    }
    return out;
}

// Raw (unsegmented, untagged) input: one sentence per line, syllables
// space-separated. Blank lines are skipped; an empty document is an empty
// list, not an error.
inline std::vector<std::vector<Syllable>> parse_raw_lines(std::string_view text) {
    std::vector<std::vector<Syllable>> out;
    detail::for_each_line(text, [&](size_t line_no, std::string_view raw) {
        std::string line = nfc(raw);
        auto tokens = split_ws(line);
        if (tokens.empty()) return;
        std::vector<Syllable> syllables;
        syllables.reserve(tokens.size());
        for (size_t t = 0; t < tokens.size(); ++t) {
            if (tokens[t].find('_') != std::string_view::npos)
                throw ParseError("line " + std::to_string(line_no) + ": raw input token '" +
                                 std::string(tokens[t]) + "' contains '_'");
            syllables.emplace_back(std::string(tokens[t]));
        }
        out.push_back(std::move(syllables));
    });
    return out;
}

}  // namespace segtag
