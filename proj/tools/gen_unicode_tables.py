#!/usr/bin/env python3
"""Regenerates include/segtag/unicode_data.hpp from Python's unicodedata.

Emits three sorted tables used by the NFC normalizer:
  - combining classes (nonzero ccc only), packed (cp << 8) | ccc
  - canonical decompositions (single step, Hangul excluded)
  - primary composition pairs, packed (first << 21) | second
"""

import sys
import unicodedata

HANGUL_S_BASE = 0xAC00
HANGUL_S_COUNT = 11172


def canonical_decomposition(cp):
    if HANGUL_S_BASE <= cp < HANGUL_S_BASE + HANGUL_S_COUNT:
        return None
    d = unicodedata.decomposition(chr(cp))
    if not d or d.startswith("<"):
        return None
    parts = [int(x, 16) for x in d.split()]
    assert 1 <= len(parts) <= 2
    return parts


def main(out_path):
    ccc = []
    decomp = []
    comp = []
    for cp in range(0x110000):
        if 0xD800 <= cp <= 0xDFFF:
            continue
        c = unicodedata.combining(chr(cp))
        if c:
            ccc.append((cp, c))
        parts = canonical_decomposition(cp)
        if parts is None:
            continue
        a = parts[0]
        b = parts[1] if len(parts) == 2 else 0
        decomp.append((cp, a, b))
        # A pair composes back iff NFC of the decomposition is the original
        # code point (this bakes in the full composition exclusions).
        if len(parts) == 2 and unicodedata.combining(chr(cp)) == 0:
            if unicodedata.normalize("NFC", chr(a) + chr(b)) == chr(cp):
                comp.append((a, b, cp))
    comp.sort(key=lambda t: (t[0] << 21) | t[1])

    with open(out_path, "w", encoding="utf-8") as f:
        w = f.write
        w("// Generated by tools/gen_unicode_tables.py (Unicode %s). Do not edit.\n"
          % unicodedata.unidata_version)
        w("#pragma once\n\n#include <cstdint>\n#include <cstddef>\n\n")
        w("namespace segtag::unicode_data {\n\n")

        w("// (cp << 8) | canonical_combining_class, sorted by cp\n")
        w("inline constexpr uint32_t kCombiningClass[] = {\n")
        for i, (cp, c) in enumerate(ccc):
            w("0x%08Xu,%s" % ((cp << 8) | c, "\n" if i % 8 == 7 else ""))
        w("};\n")
        w("inline constexpr size_t kCombiningClassCount = %d;\n\n" % len(ccc))

        w("// cp, first, second (0 = singleton), sorted by cp\n")
        w("inline constexpr uint32_t kDecomposition[][3] = {\n")
        for cp, a, b in decomp:
            w("{0x%X,0x%X,0x%X},\n" % (cp, a, b))
        w("};\n")
        w("inline constexpr size_t kDecompositionCount = %d;\n\n" % len(decomp))

        w("// (first << 21) | second, sorted; parallel composite table\n")
        w("inline constexpr uint64_t kCompositionKey[] = {\n")
        for i, (a, b, _) in enumerate(comp):
            w("0x%012Xull,%s" % ((a << 21) | b, "\n" if i % 6 == 5 else ""))
        w("};\n")
        w("inline constexpr uint32_t kCompositionValue[] = {\n")
        for i, (_, _, c) in enumerate(comp):
            w("0x%Xu,%s" % (c, "\n" if i % 10 == 9 else ""))
        w("};\n")
        w("inline constexpr size_t kCompositionCount = %d;\n\n" % len(comp))
        w("}  // namespace segtag::unicode_data\n")
    print("wrote %s: %d ccc, %d decomp, %d comp" %
          (out_path, len(ccc), len(decomp), len(comp)))


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "include/segtag/unicode_data.hpp")
