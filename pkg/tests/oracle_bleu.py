"""Brute-force BLEU reference used only by tests.

Deliberately independent of cotforge.metrics: n-grams are enumerated with
explicit loops and list counting, and the score assembled from the
documented formula (clipped corpus precision, BP = min(1, exp(1 - r/c)),
add-one smoothing on zero-match higher orders, neutral precision for
orders with no n-grams, geometric mean as a plain product ** (1/n)).
"""

import math


def ngrams(tokens, n):
    out = []
    for i in range(len(tokens)):
        if i + n <= len(tokens):
            out.append(tuple(tokens[i:i + n]))
    return out


def oracle_bleu(hyp_corpus, ref_corpus):
    """hyp_corpus/ref_corpus: lists of token lists. Returns (ps, bp, scores)."""
    assert len(hyp_corpus) == len(ref_corpus) and hyp_corpus

    hyp_len = 0
    ref_len = 0
    for h in hyp_corpus:
        hyp_len += len(h)
    for r in ref_corpus:
        ref_len += len(r)

    ps = []
    for n in (1, 2, 3, 4):
        total = 0
        matched = 0
        for h, r in zip(hyp_corpus, ref_corpus):
            hgrams = ngrams(h, n)
            rgrams = ngrams(r, n)
            total += len(hgrams)
            for g in set(hgrams):
                matched += min(hgrams.count(g), rgrams.count(g))
        if total == 0:
            ps.append(1.0)
        elif matched == 0:
            ps.append(1.0 / (total + 1.0) if n > 1 else 0.0)
        else:
            ps.append(matched / total)

    if hyp_len == 0:
        bp = 1.0 if ref_len == 0 else 0.0
    else:
        bp = min(1.0, math.exp(1.0 - ref_len / hyp_len))

    scores = []
    for n in (1, 2, 3, 4):
        prod = 1.0
        zero = False
        for p in ps[:n]:
            if p == 0.0:
                zero = True
                break
            prod *= p
        scores.append(0.0 if zero else bp * prod ** (1.0 / n))
    return ps, bp, scores
