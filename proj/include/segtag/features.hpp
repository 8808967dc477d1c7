#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "segtag/error.hpp"
#include "segtag/unicode.hpp"

namespace segtag {

inline constexpr const char* kBosToken = "<BOS>";
inline constexpr const char* kEosToken = "<EOS>";

enum class TemplateKind : uint8_t {
    Token,         // token at a window offset
    TokenBigram,   // pair of adjacent window offsets
    Prefix,        // first k code points of token 0
    Suffix,        // last k code points of token 0
    Shape,         // character-class sketch of token 0
    PrevTag,       // previous predicted label
    PrevTagToken,  // previous label conjoined with token 0
};

struct FeatureTemplate {
    std::string id;            // stable, unique within a model
    TemplateKind kind;
    std::vector<int> offsets;  // in [-2, +2]
    int k = 0;                 // 1..3 for Prefix/Suffix
};

inline bool is_transition_template(const FeatureTemplate& t) {
    return t.kind == TemplateKind::PrevTag || t.kind == TemplateKind::PrevTagToken;
}

namespace feat_detail {

inline FeatureTemplate token_at(int off) {
    return {"w" + std::to_string(off), TemplateKind::Token, {off}, 0};
}
inline FeatureTemplate bigram_at(int off) {
    return {"w" + std::to_string(off) + "w" + std::to_string(off + 1),
            TemplateKind::TokenBigram,
            {off, off + 1},
            0};
}

}  // namespace feat_detail

// Token window -2..+2, neighbour bigrams, short prefixes/suffixes, a shape
// sketch, and first-order tag features.
inline std::vector<FeatureTemplate> default_templates() {
    using namespace feat_detail;
    std::vector<FeatureTemplate> out;
    for (int off = -2; off <= 2; ++off) out.push_back(token_at(off));
    out.push_back(bigram_at(-1));
    out.push_back(bigram_at(0));
    for (int k = 1; k <= 3; ++k)
        out.push_back({"p" + std::to_string(k), TemplateKind::Prefix, {0}, k});
    for (int k = 1; k <= 3; ++k)
        out.push_back({"s" + std::to_string(k), TemplateKind::Suffix, {0}, k});
    out.push_back({"sh", TemplateKind::Shape, {0}, 0});
    out.push_back({"pt", TemplateKind::PrevTag, {}, 0});
    out.push_back({"ptw0", TemplateKind::PrevTagToken, {0}, 0});
    return out;
}

// Inverse of the id scheme above; used when reading model files.
inline FeatureTemplate template_from_id(std::string_view id) {
    auto fail = [&] { return ModelError("unknown feature template id '" + std::string(id) + "'"); };
    auto parse_off = [&](std::string_view s) {
        try {
            size_t used = 0;
            int v = std::stoi(std::string(s), &used);
            if (used != s.size() || v < -2 || v > 2) throw fail();
            return v;
        } catch (const std::logic_error&) {
            throw fail();
        }
    };
    if (id == "sh") return {"sh", TemplateKind::Shape, {0}, 0};
    if (id == "pt") return {"pt", TemplateKind::PrevTag, {}, 0};
    if (id == "ptw0") return {"ptw0", TemplateKind::PrevTagToken, {0}, 0};
    if (id.size() >= 2 && (id[0] == 'p' || id[0] == 's') && id[1] >= '1' && id[1] <= '3' &&
        id.size() == 2) {
        int k = id[1] - '0';
        return {std::string(id), id[0] == 'p' ? TemplateKind::Prefix : TemplateKind::Suffix, {0}, k};
    }
    if (!id.empty() && id[0] == 'w') {
        size_t second = id.find('w', 1);
        if (second == std::string_view::npos) {
            int off = parse_off(id.substr(1));
            return feat_detail::token_at(off);
        }
        int a = parse_off(id.substr(1, second - 1));
        int b = parse_off(id.substr(second + 1));
        if (b != a + 1) throw fail();
        return feat_detail::bigram_at(a);
    }
    throw fail();
}

namespace feat_detail {

inline const std::string& window_token(const std::vector<std::string>& tokens, size_t i, int off) {
    static const std::string bos = kBosToken;
    static const std::string eos = kEosToken;
    long long j = static_cast<long long>(i) + off;
    if (j < 0) return bos;
    if (j >= static_cast<long long>(tokens.size())) return eos;
    return tokens[static_cast<size_t>(j)];
}

// Character-class sketch, run-compressed: "Cuộc" -> "Xx", "25" -> "9".
// Non-ASCII letters are classified via their canonical base character.
inline std::string token_shape(const std::string& token) {
    std::string out;
    char last = 0;
    for (char32_t cp : decode_utf8(token)) {
        if (cp > 0x7F) {
            std::vector<char32_t> base;
            detail::decompose_cp(cp, base);
            cp = base[0];
            if (cp == 0x110) cp = 'D';  // Đ has no decomposition
            if (cp == 0x111) cp = 'd';
        }
        char cls;
        if (cp >= 'A' && cp <= 'Z')
            cls = 'X';
        else if (cp >= 'a' && cp <= 'z')
            cls = 'x';
        else if (cp >= '0' && cp <= '9')
            cls = '9';
        else if (cp > 0x7F)
            cls = 'u';
        else
            cls = 'o';
        if (cls != last) out.push_back(cls);
        last = cls;
    }
    return out;
}

// Value of one template at position i, or nullopt when it does not apply
// (prefix/suffix longer than the token).
inline std::optional<std::string> template_value(const FeatureTemplate& t,
                                                 const std::vector<std::string>& tokens, size_t i,
                                                 const std::string* prev_tag) {
    switch (t.kind) {
        case TemplateKind::Token:
            return window_token(tokens, i, t.offsets[0]);
        case TemplateKind::TokenBigram:
            return window_token(tokens, i, t.offsets[0]) + "|" +
                   window_token(tokens, i, t.offsets[1]);
        case TemplateKind::Prefix: {
            const std::string& tok = tokens[i];
            if (code_point_count(tok) < static_cast<size_t>(t.k)) return std::nullopt;
            return std::string(cp_prefix(tok, t.k));
        }
        case TemplateKind::Suffix: {
            const std::string& tok = tokens[i];
            if (code_point_count(tok) < static_cast<size_t>(t.k)) return std::nullopt;
            return std::string(cp_suffix(tok, t.k));
        }
        case TemplateKind::Shape:
            return token_shape(tokens[i]);
        case TemplateKind::PrevTag:
            return prev_tag ? *prev_tag : std::string(kBosToken);
        case TemplateKind::PrevTagToken:
            return (prev_tag ? *prev_tag : std::string(kBosToken)) + "|" + tokens[i];
    }
    return std::nullopt;
}

}  // namespace feat_detail

// All feature strings ("<template-id>=<value>") for position i. prev_tag is
// null at a sequence boundary, which yields the <BOS> placeholder value.
inline std::vector<std::string> extract_features(const std::vector<std::string>& tokens, size_t i,
                                                 const std::string* prev_tag,
                                                 const std::vector<FeatureTemplate>& templates) {
    if (i >= tokens.size()) throw std::out_of_range("extract_features: position out of range");
    std::vector<std::string> out;
    out.reserve(templates.size());
    for (const auto& t : templates) {
        auto v = feat_detail::template_value(t, tokens, i, prev_tag);
        if (v) out.push_back(t.id + "=" + *v);
    }
    return out;
}

}  // namespace segtag
