#!/usr/bin/env python3
"""Writes the default pronoun rule table (data/rules.tsv)."""

import argparse
import pathlib
import sys

VERSION = "1"
SEMS = ("person", "animal", "object", "unknown")
GENDERS = ("m", "f")
NUMBERS = ("sg", "pl")


def strong_es(sem, g, n, demonstrative_for_things):
    if demonstrative_for_things and sem in ("object", "unknown"):
        return {("m", "sg"): "éste", ("f", "sg"): "ésta",
                ("m", "pl"): "éstos", ("f", "pl"): "éstas"}[(g, n)]
    return {("m", "sg"): "él", ("f", "sg"): "ella",
            ("m", "pl"): "ellos", ("f", "pl"): "ellas"}[(g, n)]


def clitic_es(g, n):
    return {("m", "sg"): "lo", ("f", "sg"): "la",
            ("m", "pl"): "los", ("f", "pl"): "las"}[(g, n)]


def en_to_es(cls, fn, sem, g, n):
    if fn == "COMPL":
        if cls == "him":
            return clitic_es("m", n)
        if cls == "her":
            return clitic_es("f", n)
        return clitic_es(g, n)
    if cls == "he":
        return strong_es(sem, "m", n, False)
    if cls == "she":
        return strong_es(sem, "f", n, False)
    if cls == "him":
        return strong_es(sem, "m", n, False)
    if cls == "her":
        return strong_es(sem, "f", n, False)
    # it, they, them: the antecedent decides
    if cls in ("they", "them") and n == "pl":
        return strong_es(sem, g, n, False)
    return strong_es(sem, g, n, True)


def es_to_en(cls, fn, sem, g, n):
    subject = fn == "SUBJ"
    if n == "pl":
        return "they" if subject else "them"
    personal = cls in ("él", "∅", "lo", "le")
    human = sem == "person" or (sem == "unknown" and personal)
    if not human:
        return "it"
    if subject:
        return "he" if g == "m" else "she"
    return "him" if g == "m" else "her"


EN2ES_CLASSES = [("he", "SUBJ"), ("she", "SUBJ"), ("it", "SUBJ"), ("they", "SUBJ"),
                 ("him", "COMPL"), ("her", "COMPL"), ("it", "COMPL"), ("them", "COMPL"),
                 ("him", "PREP"), ("her", "PREP"), ("it", "PREP"), ("them", "PREP")]
ES2EN_CLASSES = [("él", "SUBJ"), ("éste", "SUBJ"), ("ése", "SUBJ"), ("aquél", "SUBJ"),
                 ("∅", "SUBJ"), ("él", "PREP"), ("éste", "PREP"), ("ése", "PREP"),
                 ("aquél", "PREP"), ("lo", "COMPL"), ("le", "COMPL")]


def rows():
    for direction, classes, fn_map in (("EN2ES", EN2ES_CLASSES, en_to_es),
                                       ("ES2EN", ES2EN_CLASSES, es_to_en)):
        for cls, fn in classes:
            for sem in SEMS:
                for g in GENDERS:
                    for n in NUMBERS:
                        rhs = fn_map(cls, fn, sem, g, n)
                        yield f"{direction} {cls} {fn} {sem} {g} {n} -> {rhs}"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=pathlib.Path(__file__).resolve().parent.parent / "data" / "rules.tsv")
    args = ap.parse_args()
    lines = [f"# version: {VERSION}",
             "# DIRECTION CLASS FUNCTION SEM GENDER NUMBER -> TARGET",
             "# GENDER and NUMBER are the antecedent's, in the target language."]
    lines.extend(rows())
    pathlib.Path(args.out).write_text("\n".join(lines) + "\n", encoding="utf-8")
    return 0


if __name__ == "__main__":
    sys.exit(main())
