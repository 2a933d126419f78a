#!/usr/bin/env python3
"""Expands the compact corpus sources in corpus/src into tagged text and
annotation files.

Source format, one sentence per line:
  lang ES|EN             first line
  % ...                  comment
  word/TAG               lemma = lowercased word
  word/lemma/TAG
  [N ... ]               mention of chain N
  TOKEN@N                pronoun in chain N
  ∅@N                    zero pronoun before the next finite verb
  suffixes on @N:  >TARGET  target pronoun,  ~A:M / ~B:M  annotator variants
  TAG^status             gold subject status of a finite verb
"""

import argparse
import pathlib
import re
import sys

ANN = re.compile(r"^(?P<chain>\d+)(?P<rest>.*)$")


class SourceError(Exception):
    pass


def parse_annotation(text, where):
    m = ANN.match(text)
    if not m:
        raise SourceError(f"{where}: bad annotation '@{text}'")
    ann = {"chain": int(m.group("chain")), "target": None, "A": None, "B": None}
    for part in re.findall(r"[>~][^>~]+", m.group("rest")):
        if part[0] == ">":
            ann["target"] = part[1:]
        else:
            who, _, chain = part[1:].partition(":")
            if who not in ("A", "B") or not chain.isdigit():
                raise SourceError(f"{where}: bad variant '{part}'")
            ann[who] = int(chain)
    return ann


def parse_source(path):
    lines = path.read_text(encoding="utf-8").splitlines()
    if not lines or not lines[0].startswith("lang "):
        raise SourceError(f"{path}: first line must be 'lang ES|EN'")
    lang = lines[0].split()[1]
    sentences = []
    for ln, line in enumerate(lines[1:], start=2):
        line = line.strip()
        if not line or line.startswith("%"):
            continue
        where = f"{path}:{ln}"
        tokens, mentions, pronouns, verbs = [], [], [], []
        stack, pending_zero = [], None
        for item in line.split():
            if item.startswith("[") and item[1:].isdigit():
                stack.append((int(item[1:]), len(tokens)))
                continue
            if item == "]":
                if not stack:
                    raise SourceError(f"{where}: unbalanced ']'")
                chain, begin = stack.pop()
                mentions.append({"chain": chain, "begin": begin, "end": len(tokens)})
                continue
            if item.startswith("∅"):
                if pending_zero is not None:
                    raise SourceError(f"{where}: two zero markers in a row")
                if "@" not in item:
                    raise SourceError(f"{where}: zero marker without chain")
                pending_zero = parse_annotation(item.split("@", 1)[1], where)
                continue
            ann = None
            if "@" in item and not item.startswith("@"):
                item, _, a = item.rpartition("@")
                ann = parse_annotation(a, where)
            parts = item.split("/")
            if len(parts) == 2:
                surface, tag = parts
                lemma = surface.lower()
            elif len(parts) == 3:
                surface, lemma, tag = parts
            else:
                raise SourceError(f"{where}: bad token '{item}'")
            status = None
            if "^" in tag:
                tag, _, status = tag.partition("^")
            index = len(tokens)
            tokens.append((surface, lemma, tag))
            atoms = tag.split("-")
            finite = ("FIN" in atoms or "IMP" in atoms or
                      atoms[0] in ("VBD", "VBZ", "VBP", "MD"))
            if pending_zero is not None and finite:
                pending_zero["zero"] = True
                pending_zero["token"] = index
                pronouns.append(pending_zero)
                pending_zero = None
                if status is None:
                    status = "omitted"
            if finite and lang == "ES":
                verbs.append((index, status or "present"))
            elif status is not None:
                raise SourceError(f"{where}: status on a non-finite token")
            if ann is not None:
                ann["zero"] = False
                ann["token"] = index
                pronouns.append(ann)
        if stack:
            raise SourceError(f"{where}: unclosed mention")
        if pending_zero is not None:
            raise SourceError(f"{where}: zero marker without a finite verb")
        sentences.append({"tokens": tokens, "mentions": mentions,
                          "pronouns": pronouns, "verbs": verbs})
    return lang, sentences


def antecedent(sentences, chain, s, token):
    before, after = None, None
    for si, sent in enumerate(sentences):
        for m in sent["mentions"]:
            if m["chain"] != chain:
                continue
            key = (si, m["begin"], m["end"])
            if si < s or (si == s and m["end"] <= token):
                if before is None or key > before:
                    before = key
            elif after is None or key < after:
                after = key
    found = before or after
    if found is None:
        return "exophoric"
    si, b, e = found
    return f"s{si}.t{b}" if e - b == 1 else f"s{si}.t{b}..t{e - 1}"


def gold_lines(sentences, who=None):
    out = []
    for si, sent in enumerate(sentences):
        for p in sent["pronouns"]:
            chain = p["chain"]
            if who and p[who] is not None:
                chain = p[who]
            loc = f"s{si}.z{p['token']}" if p["zero"] else f"s{si}.t{p['token']}"
            target = p["target"] if p["target"] is not None else "-"
            ante = antecedent(sentences, chain, si, p["token"])
            out.append(f"{loc} -> {ante} :: {target} :: chain {chain}")
    for si, sent in enumerate(sentences):
        for m in sorted(sent["mentions"], key=lambda m: (m["begin"], m["end"])):
            b, e = m["begin"], m["end"]
            loc = f"s{si}.t{b}" if e - b == 1 else f"s{si}.t{b}..t{e - 1}"
            out.append(f"mention {loc} :: chain {m['chain']}")
    for si, sent in enumerate(sentences):
        for index, status in sent["verbs"]:
            out.append(f"verb s{si}.t{index} = {status}")
    return out


def tagged_text(lang, sentences, name):
    out = [f"# lang: {lang}", f"# id: {name}"]
    for sent in sentences:
        out.append("")
        for surface, lemma, tag in sent["tokens"]:
            out.append(f"{surface}\t{lemma}\t{tag}")
    return "\n".join(out) + "\n"


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--root", default=pathlib.Path(__file__).resolve().parent.parent / "corpus")
    args = ap.parse_args()
    root = pathlib.Path(args.root)
    for src in sorted((root / "src").glob("*.src")):
        try:
            lang, sentences = parse_source(src)
        except SourceError as e:
            print(e, file=sys.stderr)
            return 1
        out_dir = root / lang.lower()
        out_dir.mkdir(parents=True, exist_ok=True)
        name = src.stem
        (out_dir / f"{name}.tag").write_text(tagged_text(lang, sentences, name), encoding="utf-8")
        for suffix, who in (("gold", None), ("annA", "A"), ("annB", "B")):
            lines = gold_lines(sentences, who)
            (out_dir / f"{name}.{suffix}").write_text("\n".join(lines) + "\n", encoding="utf-8")
    return 0


if __name__ == "__main__":
    sys.exit(main())
