#!/usr/bin/env python3
# Copyright 2026 The Semfields Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Renders the fixture thesaurus in the Project Gutenberg Roget layout.

Reads tools/fixture/headings.tsv and tools/fixture/words.tsv, writes
data/roget_fixture.txt and data/lexicon.tsv, and refreshes the #pin line of
data/manifest.tsv.
"""

import argparse
import collections
import pathlib
import sys

ROMAN = ["I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX", "X"]

CLASS_TITLES = {
    "Class I": "WORDS EXPRESSING ABSTRACT RELATIONS",
    "Class II": "WORDS RELATING TO SPACE",
    "Class III": "WORDS RELATING TO MATTER",
    "Class IV": "WORDS RELATING TO THE INTELLECTUAL FACULTIES",
    "Class V": "WORDS RELATING TO THE VOLUNTARY POWERS",
    "Class VI": "WORDS RELATING TO THE SENTIMENT AND MORAL POWERS",
}

# First section id of each division, by class.
DIVISIONS = {
    15: "DIVISION (I) FORMATION OF IDEAS",
    21: "DIVISION (II) COMMUNICATION OF IDEAS",
    24: "DIVISION (I) INDIVIDUAL VOLITION",
    27: "DIVISION (II) INTERSOCIAL VOLITION",
}

TAGS = {"n": "noun", "v": "verb", "a": "adjective", "r": "adverb"}

BLOCKS = [("n", "N."), ("v", "V."), ("a", "Adj."), ("r", "Adv."), ("p", "Phr.")]


def fnv1a64(data: bytes) -> str:
    h = 0xCBF29CE484222325
    for b in data:
        h ^= b
        h = (h * 0x100000001B3) & 0xFFFFFFFFFFFFFFFF
    return "fnv1a64:%016x" % h


def rows(path):
    for line in path.read_text(encoding="utf-8").splitlines():
        if line.strip() and not line.startswith("#"):
            yield line.split("\t")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--root", default=pathlib.Path(__file__).resolve().parent.parent, type=pathlib.Path)
    args = ap.parse_args()
    root = args.root

    manifest = []
    pins_at = None
    manifest_lines = (root / "data/manifest.tsv").read_text(encoding="utf-8").splitlines()
    for i, line in enumerate(manifest_lines):
        if line.startswith("#pin"):
            pins_at = i
        elif line and not line.startswith("#"):
            sid, name, cls = line.split("\t")
            manifest.append((int(sid), name, cls))

    headings = collections.OrderedDict()
    for key, sid, title in rows(root / "tools/fixture/headings.tsv"):
        headings[key] = (int(sid), title)

    members = collections.defaultdict(lambda: collections.defaultdict(list))
    errors = []
    lexicon = []
    for fields in rows(root / "tools/fixture/words.tsv"):
        word, senses = fields[0], fields[1]
        for sense in senses.split():
            pos, keys = sense.split(":")
            if pos in TAGS and " " not in word and (word, TAGS[pos]) not in lexicon:
                lexicon.append((word, TAGS[pos]))
            for key in keys.split(","):
                if key not in headings:
                    errors.append("%s: unknown heading '%s'" % (word, key))
                    continue
                members[key][pos].append(word)
    if errors:
        sys.exit("\n".join(errors))

    out = [
        "Roget-layout fixture thesaurus for semfields.",
        "",
        "Hand-authored; follows the markup of the Project Gutenberg Roget text",
        "(class, division and section markers, numbered headings, part of speech",
        "blocks) over a small vocabulary.",
        "",
        "*** START OF THE FIXTURE THESAURUS ***",
        "",
    ]
    number = 0
    current_class = None
    section_in_class = 0
    for sid, name, cls in manifest:
        if cls != current_class:
            current_class = cls
            section_in_class = 0
            out += ["", cls.upper(), CLASS_TITLES[cls], ""]
        if sid in DIVISIONS:
            out += [DIVISIONS[sid], ""]
        out += ["SECTION %s. %s" % (ROMAN[section_in_class], name.upper()), ""]
        section_in_class += 1
        for key, (hsid, title) in headings.items():
            if hsid != sid:
                continue
            number += 1
            parts = []
            for pos, marker in BLOCKS:
                words = sorted(set(members[key].get(pos, [])))
                if words:
                    sep = "; " if pos == "p" else ", "
                    parts.append("%s %s." % (marker, sep.join(words)))
            if not parts:
                parts = ["N. %s." % title.lower()]
            out.append("#%d. %s.--%s" % (number, title, parts[0]))
            out += parts[1:]
            out.append("")
    out += ["", "*** END OF THE FIXTURE THESAURUS ***", ""]
    text = "\n".join(out).encode("utf-8")
    (root / "data/roget_fixture.txt").write_bytes(text)

    lex = ["# word<TAB>tag, most likely tag first. Generated with the fixture thesaurus."]
    lex += ["%s\t%s" % pair for pair in lexicon]
    (root / "data/lexicon.tsv").write_text("\n".join(lex) + "\n", encoding="utf-8")

    pin = "#pin\t" + fnv1a64(text)
    if pins_at is None:
        manifest_lines.append(pin)
    else:
        manifest_lines[pins_at] = pin
    (root / "data/manifest.tsv").write_text("\n".join(manifest_lines) + "\n", encoding="utf-8")
    print("%d headings, %s" % (number, pin.split("\t")[1]))


if __name__ == "__main__":
    main()
