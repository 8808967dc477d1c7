#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "segtag/error.hpp"
#include "segtag/unicode_data.hpp"

namespace segtag {

inline void append_utf8(std::string& out, char32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

inline std::string encode_utf8(const std::vector<char32_t>& cps) {
    std::string out;
    out.reserve(cps.size());
    for (char32_t cp : cps) append_utf8(out, cp);
    return out;
}

// Strict UTF-8 decoder: rejects overlong forms, surrogates and truncation.
inline std::vector<char32_t> decode_utf8(std::string_view s) {
    std::vector<char32_t> out;
    out.reserve(s.size());
    size_t i = 0;
    while (i < s.size()) {
        unsigned char b0 = static_cast<unsigned char>(s[i]);
        char32_t cp = 0;
        size_t len = 0;
        if (b0 < 0x80) {
            cp = b0;
            len = 1;
        } else if ((b0 & 0xE0) == 0xC0) {
            cp = b0 & 0x1F;
            len = 2;
        } else if ((b0 & 0xF0) == 0xE0) {
            cp = b0 & 0x0F;
            len = 3;
        } else if ((b0 & 0xF8) == 0xF0) {
            cp = b0 & 0x07;
            len = 4;
        } else {
            throw ParseError("invalid UTF-8 at byte offset " + std::to_string(i));
        }
        if (i + len > s.size())
            throw ParseError("truncated UTF-8 sequence at byte offset " + std::to_string(i));
        for (size_t k = 1; k < len; ++k) {
            unsigned char b = static_cast<unsigned char>(s[i + k]);
            if ((b & 0xC0) != 0x80)
                throw ParseError("invalid UTF-8 continuation at byte offset " +
                                 std::to_string(i + k));
            cp = (cp << 6) | (b & 0x3F);
        }
        static constexpr char32_t kMin[5] = {0, 0, 0x80, 0x800, 0x10000};
        if (len > 1 && cp < kMin[len])
            throw ParseError("overlong UTF-8 sequence at byte offset " + std::to_string(i));
        if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))
            throw ParseError("invalid code point in UTF-8 at byte offset " + std::to_string(i));
        out.push_back(cp);
        i += len;
    }
    return out;
}

inline int combining_class(char32_t cp) {
    using namespace unicode_data;
    uint32_t key = static_cast<uint32_t>(cp) << 8;
    const uint32_t* end = kCombiningClass + kCombiningClassCount;
    const uint32_t* it = std::lower_bound(kCombiningClass, end, key);
    if (it != end && (*it >> 8) == cp) return static_cast<int>(*it & 0xFF);
    return 0;
}

namespace detail {

constexpr char32_t kHangulSBase = 0xAC00;
constexpr char32_t kHangulLBase = 0x1100;
constexpr char32_t kHangulVBase = 0x1161;
constexpr char32_t kHangulTBase = 0x11A7;
constexpr int kHangulLCount = 19, kHangulVCount = 21, kHangulTCount = 28;
constexpr int kHangulNCount = kHangulVCount * kHangulTCount;
constexpr int kHangulSCount = kHangulLCount * kHangulNCount;

inline void decompose_cp(char32_t cp, std::vector<char32_t>& out) {
    using namespace unicode_data;
    if (cp >= kHangulSBase && cp < kHangulSBase + kHangulSCount) {
        int idx = static_cast<int>(cp - kHangulSBase);
        out.push_back(kHangulLBase + idx / kHangulNCount);
        out.push_back(kHangulVBase + (idx % kHangulNCount) / kHangulTCount);
        if (idx % kHangulTCount) out.push_back(kHangulTBase + idx % kHangulTCount);
        return;
    }
    size_t lo = 0, hi = kDecompositionCount;
    while (lo < hi) {
        size_t mid = (lo + hi) / 2;
        if (kDecomposition[mid][0] < cp)
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo < kDecompositionCount && kDecomposition[lo][0] == cp) {
        decompose_cp(kDecomposition[lo][1], out);
        if (kDecomposition[lo][2]) decompose_cp(kDecomposition[lo][2], out);
        return;
    }
    out.push_back(cp);
}

inline char32_t compose_pair(char32_t a, char32_t b) {
    // Hangul LV / LVT
    if (a >= kHangulLBase && a < kHangulLBase + kHangulLCount && b >= kHangulVBase &&
        b < kHangulVBase + kHangulVCount) {
        return kHangulSBase +
               ((a - kHangulLBase) * kHangulVCount + (b - kHangulVBase)) * kHangulTCount;
    }
    if (a >= kHangulSBase && a < kHangulSBase + kHangulSCount &&
        (a - kHangulSBase) % kHangulTCount == 0 && b > kHangulTBase &&
        b < kHangulTBase + kHangulTCount) {
        return a + (b - kHangulTBase);
    }
    using namespace unicode_data;
    uint64_t key = (static_cast<uint64_t>(a) << 21) | b;
    const uint64_t* end = kCompositionKey + kCompositionCount;
    const uint64_t* it = std::lower_bound(kCompositionKey, end, key);
    if (it != end && *it == key) return kCompositionValue[it - kCompositionKey];
    return 0;
}

}  // namespace detail

// Canonical composition (NFC) of a UTF-8 string.
inline std::string nfc(std::string_view s) {
    // Fast path: pure ASCII is already NFC.
    bool ascii = true;
    for (char c : s) {
        if (static_cast<unsigned char>(c) >= 0x80) {
            ascii = false;
            break;
        }
    }
    if (ascii) return std::string(s);

    std::vector<char32_t> cps = decode_utf8(s);
    std::vector<char32_t> nfd;
    nfd.reserve(cps.size() + 8);
    for (char32_t cp : cps) detail::decompose_cp(cp, nfd);

    // Canonical ordering: stable sort of nonzero-ccc runs.
    for (size_t i = 1; i < nfd.size(); ++i) {
        int cc = combining_class(nfd[i]);
        if (cc == 0) continue;
        size_t j = i;
        while (j > 0 && combining_class(nfd[j - 1]) > cc) {
            std::swap(nfd[j - 1], nfd[j]);
            --j;
        }
    }

    std::vector<char32_t> out;
    out.reserve(nfd.size());
    ptrdiff_t starter = -1;
    int last_ccc = -1;  // ccc of last char appended after the starter, -1 = none
    for (char32_t c : nfd) {
        int cc = combining_class(c);
        if (starter >= 0 && (last_ccc == -1 || last_ccc < cc)) {
            if (char32_t p = detail::compose_pair(out[starter], c)) {
                out[starter] = p;
                continue;
            }
        }
        out.push_back(c);
        if (cc == 0) {
            starter = static_cast<ptrdiff_t>(out.size()) - 1;
            last_ccc = -1;
        } else {
            last_ccc = cc;
        }
    }
    return encode_utf8(out);
}

inline size_t code_point_count(std::string_view s) {
    size_t n = 0;
    for (char c : s)
        if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) ++n;
    return n;
}

// First k code points (assumes valid UTF-8; returns whole string if shorter).
inline std::string_view cp_prefix(std::string_view s, size_t k) {
    size_t i = 0, seen = 0;
    while (i < s.size() && seen < k) {
        ++i;
        while (i < s.size() && (static_cast<unsigned char>(s[i]) & 0xC0) == 0x80) ++i;
        ++seen;
    }
    return s.substr(0, i);
}

inline std::string_view cp_suffix(std::string_view s, size_t k) {
    size_t i = s.size(), seen = 0;
    while (i > 0 && seen < k) {
        --i;
        while (i > 0 && (static_cast<unsigned char>(s[i]) & 0xC0) == 0x80) --i;
        ++seen;
    }
    return s.substr(i);
}

}  // namespace segtag
