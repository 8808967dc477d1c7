#pragma once

#include <string>
#include <string_view>

#include "segtag/error.hpp"

namespace segtag {

// What a backend's tokens and labels are:
//   WordPos           - tokens are words, labels are POS tags
//   SyllableCombined  - tokens are syllables, labels are B-X / I-X
//   SyllableSeg       - tokens are syllables, labels are B / I
enum class LabelMode : uint8_t { WordPos, SyllableCombined, SyllableSeg };

inline std::string to_string(LabelMode m) {
    switch (m) {
        case LabelMode::WordPos: return "word-pos";
        case LabelMode::SyllableCombined: return "syllable-combined";
        case LabelMode::SyllableSeg: return "syllable-seg";
    }
    return "?";
}

inline LabelMode label_mode_from_string(std::string_view s) {
    if (s == "word-pos") return LabelMode::WordPos;
    if (s == "syllable-combined") return LabelMode::SyllableCombined;
    if (s == "syllable-seg") return LabelMode::SyllableSeg;
    throw ModelError("unknown label mode '" + std::string(s) + "'");
}

}  // namespace segtag
