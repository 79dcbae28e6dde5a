#!/usr/bin/env python3
"""Generate src/tokenizer/unicode_tables.cpp.

Emits the character classes and text-normalization tables the CLIP
tokenizer needs: letter/number/whitespace ranges as seen by the `regex`
module, Python's str.lower() mapping, ftfy's per-character fixes, and the
HTML5 named character references used by html.unescape().
Requires: ftfy, regex.
"""
import argparse
import html.entities
import sys

import ftfy
import regex


def ranges(pred):
    out = []
    start = None
    for cp in range(0x110000 + 1):
        ok = cp < 0x110000 and not (0xD800 <= cp < 0xE000) and pred(chr(cp))
        if ok and start is None:
            start = cp
        elif not ok and start is not None:
            out.append((start, cp - 1))
            start = None
    return out


def merge_surrogate_gaps(rs):
    # Surrogates never reach the classifier (input is valid UTF-8), so
    # ranges separated only by the surrogate block can be joined.
    merged = []
    for lo, hi in rs:
        if merged and merged[-1][1] == 0xD7FF and lo == 0xE000:
            merged[-1] = (merged[-1][0], hi)
        else:
            merged.append((lo, hi))
    return merged


def c_string(s):
    out = []
    for b in s.encode("utf-8"):
        if 0x20 <= b < 0x7F and chr(b) not in '"\\?':
            out.append(chr(b))
        else:
            out.append("\\x%02x" % b)
    # Split after hex escapes so a following hex digit is not absorbed.
    text = ""
    for i, piece in enumerate(out):
        text += piece
        if piece.startswith("\\x") and i + 1 < len(out) and not out[i + 1].startswith("\\x") \
                and out[i + 1] in "0123456789abcdefABCDEF":
            text += '" "'
    return '"' + text + '"'


def emit_ranges(f, name, rs):
    f.write(f"const std::array<CodepointRange, {len(rs)}> {name} = {{{{\n")
    for lo, hi in rs:
        f.write(f"    {{0x{lo:X}, 0x{hi:X}}},\n")
    f.write("}};\n\n")


def emit_map(f, name, mapping):
    items = sorted(mapping.items())
    f.write(f"const std::array<CodepointMapping, {len(items)}> {name} = {{{{\n")
    for cp, repl in items:
        f.write(f"    {{0x{cp:X}, {c_string(repl)}}},\n")
    f.write("}};\n\n")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("out")
    args = ap.parse_args()

    letter = regex.compile(r"\p{L}")
    number = regex.compile(r"\p{N}")
    space = regex.compile(r"\s")

    letters = merge_surrogate_gaps(ranges(lambda c: letter.match(c) is not None))
    numbers = merge_surrogate_gaps(ranges(lambda c: number.match(c) is not None))
    regex_space = ranges(lambda c: space.match(c) is not None)
    split_space = ranges(str.isspace)

    lower = {}
    fixes = {}
    for cp in range(0x110000):
        if 0xD800 <= cp < 0xE000:
            continue
        c = chr(cp)
        if c.lower() != c:
            lower[cp] = c.lower()
        fixed = ftfy.fix_text(c)
        if fixed != c:
            fixes[cp] = fixed

    entities = sorted(html.entities.html5.items())

    with open(args.out, "w", encoding="utf-8") as f:
        f.write("// Generated by scripts/gen_unicode_tables.py. Do not edit.\n")
        f.write(f"// regex {regex.__version__}, ftfy {ftfy.__version__}, Python {sys.version.split()[0]}\n\n")
        f.write('#include "unicode_tables.hpp"\n\n')
        f.write("namespace texttiger::tokenizer::tables {\n\n")
        emit_ranges(f, "kLetters", letters)
        emit_ranges(f, "kNumbers", numbers)
        emit_ranges(f, "kRegexWhitespace", regex_space)
        emit_ranges(f, "kSplitWhitespace", split_space)
        emit_map(f, "kLowercase", lower)
        emit_map(f, "kTextFixes", fixes)
        f.write(f"const std::array<NamedEntity, {len(entities)}> kHtmlEntities = {{{{\n")
        for name, value in entities:
            f.write(f"    {{{c_string(name)}, {c_string(value)}}},\n")
        f.write("}};\n\n")
        f.write("}  // namespace texttiger::tokenizer::tables\n")

    with open(args.out.replace(".cpp", ".sizes"), "w") as f:
        f.write(f"letters {len(letters)}\nnumbers {len(numbers)}\nregex_space {len(regex_space)}\n"
                f"split_space {len(split_space)}\nlower {len(lower)}\nfixes {len(fixes)}\n"
                f"entities {len(entities)}\n")


if __name__ == "__main__":
    main()
