#!/usr/bin/env python3
"""Independent brute-force oracle for the lexical metric suite.

Implements the pinned metric definitions from scratch (no shared code with the
C++ implementation) and prints the golden 10-case table frozen into the
acceptance tests.

Pinned definitions:
  normalize_text : lowercase; every non-alphanumeric char becomes a space,
                   except '.' kept when both neighbours are digits; tokens in
                   the 40-word stopword list dropped; whitespace collapsed.
  exact_match    : normalize_text(pred) == normalize_text(ref).
  token_f1       : SQuAD-style. lowercase; punctuation to space (same decimal
                   rule); only the articles {a, an, the} dropped; harmonic mean
                   of multiset precision/recall. Both empty -> 1, one empty -> 0.
  bleu4          : whitespace tokens of the inputs as given. Modified n-gram
                   precisions n=1..4 with eps=1e-9 smoothing:
                   p_n = (clipped + eps) / (count_n + eps), p_n = eps when the
                   candidate has no n-grams. Brevity penalty exp(1 - r/c) when
                   c < r. Both sides empty -> 1, one empty -> 0.
                   The golden table applies bleu4 to normalize_text output,
                   mirroring the benchmark runner.
  rouge_l        : whitespace tokens; LCS F-measure (beta=1); same empty rules;
                   golden table applies it to normalize_text output.
"""
import json
import math
import re
from collections import Counter

STOPWORDS = {
    "the", "a", "an", "and", "or", "but", "if", "then", "else", "when",
    "at", "by", "for", "with", "about", "against", "between", "into",
    "through", "during", "before", "after", "above", "below", "to", "from",
    "up", "down", "in", "out", "on", "off", "over", "under", "is", "are",
    "was", "were", "be", "of",
}
assert len(STOPWORDS) == 40

ARTICLES = {"a", "an", "the"}


def strip_punct(s):
    out = []
    for i, ch in enumerate(s):
        if ch.isalnum() or ch.isspace():
            out.append(ch)
        elif ch == "." and 0 < i < len(s) - 1 and s[i - 1].isdigit() and s[i + 1].isdigit():
            out.append(ch)
        else:
            out.append(" ")
    return "".join(out)


def normalize_text(s):
    toks = strip_punct(s.lower()).split()
    return " ".join(t for t in toks if t not in STOPWORDS)


def squad_tokens(s):
    toks = strip_punct(s.lower()).split()
    return [t for t in toks if t not in ARTICLES]


def exact_match(pred, ref):
    return 1.0 if normalize_text(pred) == normalize_text(ref) else 0.0


def token_f1(pred, ref):
    p, r = squad_tokens(pred), squad_tokens(ref)
    if not p and not r:
        return 1.0
    if not p or not r:
        return 0.0
    overlap = sum((Counter(p) & Counter(r)).values())
    if overlap == 0:
        return 0.0
    prec, rec = overlap / len(p), overlap / len(r)
    return 2 * prec * rec / (prec + rec)


def ngrams(toks, n):
    return Counter(tuple(toks[i:i + n]) for i in range(len(toks) - n + 1))


def bleu4(pred, ref):
    c_toks, r_toks = pred.split(), ref.split()
    if not c_toks and not r_toks:
        return 1.0
    if not c_toks or not r_toks:
        return 0.0
    eps = 1e-9
    log_sum = 0.0
    for n in range(1, 5):
        cand = ngrams(c_toks, n)
        count_n = max(0, len(c_toks) - n + 1)
        if count_n == 0:
            p_n = eps
        else:
            clipped = sum((cand & ngrams(r_toks, n)).values())
            p_n = (clipped + eps) / (count_n + eps)
        log_sum += math.log(p_n)
    bleu = math.exp(log_sum / 4.0)
    c, r = len(c_toks), len(r_toks)
    bp = 1.0 if c >= r else math.exp(1.0 - r / c)
    return bp * bleu


def rouge_l(pred, ref):
    p, r = pred.split(), ref.split()
    if not p and not r:
        return 1.0
    if not p or not r:
        return 0.0
    dp = [[0] * (len(r) + 1) for _ in range(len(p) + 1)]
    for i in range(1, len(p) + 1):
        for j in range(1, len(r) + 1):
            if p[i - 1] == r[j - 1]:
                dp[i][j] = dp[i - 1][j - 1] + 1
            else:
                dp[i][j] = max(dp[i - 1][j], dp[i][j - 1])
    lcs = dp[len(p)][len(r)]
    if lcs == 0:
        return 0.0
    prec, rec = lcs / len(p), lcs / len(r)
    return 2 * prec * rec / (prec + rec)


CASES = [
    ("The optimal soil pH for corn is 6.0 to 6.5.", "Optimal soil pH for corn is 6.0 to 6.5."),
    ("apply lime in fall", "apply lime"),
    ("Apply Lime!", "apply lime."),
    ("", ""),
    ("reduce irrigation two weeks before digging peanuts", ""),
    ("Store cucumbers above 50 F to avoid chilling injury.",
     "Chilling injury occurs when cucumbers are stored below 50 F."),
    ("rotate crops and mulch to reduce early blight",
     "use crop rotation, staking, mulch, and drip irrigation to reduce early blight"),
    ("nitrogen", "nitrogen"),
    ("Aphid thresholds are 15 to 20 percent defoliation at R1 through R6.",
     "Treat soybean defoliators at 15-20% defoliation during R1-R6."),
    ("completely unrelated words about machinery maintenance",
     "strawberry plasticulture requires raised beds with drip tape"),
]


def main():
    rows = []
    for pred, ref in CASES:
        np_, nr_ = normalize_text(pred), normalize_text(ref)
        rows.append({
            "pred": pred,
            "ref": ref,
            "em": exact_match(pred, ref),
            "f1": token_f1(pred, ref),
            "bleu4": bleu4(np_, nr_),
            "rouge_l": rouge_l(np_, nr_),
        })
    print(json.dumps(rows, indent=2))
    print("\n// frozen C++ rows: {em, f1, bleu4, rougeL}")
    for row in rows:
        print(f"    {{{row['em']:.12g}, {row['f1']:.12g}, {row['bleu4']:.12g}, {row['rouge_l']:.12g}}},")
    print("\n// normalize goldens")
    print(repr(normalize_text("The pH is 6.5.")))
    print(repr(normalize_text("Apply Lime!")))


if __name__ == "__main__":
    main()
