#!/usr/bin/env python3
"""Regenerates src/unicode_tables.cpp from Python's unicodedata.

Usage: python3 tools/gen_unicode_tables.py > src/unicode_tables.cpp
"""
import sys
import unicodedata

MAX_CP = 0x30000
HANGUL = range(0xAC00, 0xD7A4)


def ranges(pred):
    out = []
    start = None
    for cp in range(MAX_CP + 1):
        hit = cp <= MAX_CP - 1 and pred(cp)
        if hit and start is None:
            start = cp
        elif not hit and start is not None:
            out.append((start, cp - 1))
            start = None
    return out


def cat(cp):
    return unicodedata.category(chr(cp))


def is_punct(cp):
    if 33 <= cp <= 47 or 58 <= cp <= 64 or 91 <= cp <= 96 or 123 <= cp <= 126:
        return True
    return cat(cp).startswith("P")


def is_space(cp):
    return cp in (0x20, 0x09, 0x0A, 0x0D) or cat(cp) == "Zs"


def is_control(cp):
    if cp in (0x09, 0x0A, 0x0D):
        return False
    return cat(cp) in ("Cc", "Cf")


def is_mark(cp):
    return cat(cp) == "Mn"


def fold(cp):
    """Lowercase, canonical decomposition, combining-mark removal."""
    s = chr(cp).lower()
    s = unicodedata.normalize("NFD", s)
    return "".join(c for c in s if unicodedata.category(c) != "Mn")


def main():
    w = sys.stdout.write
    w("// Generated by tools/gen_unicode_tables.py (Unicode %s). Do not edit.\n\n"
      % unicodedata.unidata_version)
    w('#include "unicode_tables.hpp"\n\nnamespace bertsa::unicode {\n\n')
    for name, pred in (("kPunctuation", is_punct), ("kWhitespace", is_space),
                       ("kControl", is_control), ("kNonspacingMark", is_mark)):
        rs = ranges(pred)
        w("const std::array<CodepointRange, %d> %s = {{\n" % (len(rs), name))
        for a, b in rs:
            w("    {0x%X, 0x%X},\n" % (a, b))
        w("}};\n\n")
    entries = []
    for cp in range(MAX_CP):
        if cp in HANGUL or 0xD800 <= cp <= 0xDFFF or is_mark(cp):
            continue
        f = fold(cp)
        if f != chr(cp):
            cps = [ord(c) for c in f]
            assert len(cps) <= 3, (hex(cp), cps)
            entries.append((cp, cps))
    w("const std::array<FoldEntry, %d> kFold = {{\n" % len(entries))
    for cp, cps in entries:
        padded = cps + [0] * (3 - len(cps))
        w("    {0x%X, %d, {0x%X, 0x%X, 0x%X}},\n" % (cp, len(cps), *padded))
    w("}};\n\n}  // namespace bertsa::unicode\n")


if __name__ == "__main__":
    main()
