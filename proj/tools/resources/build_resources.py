#!/usr/bin/env python3
"""Regenerates the bundled NLP resources under data/.

Sources (all permissively licensed, fetched once from PyPI):
  textblob 0.20.1      textblob/en/en-lexicon.txt, en-sentiment.xml (MIT)
  vaderSentiment 3.3.2 vaderSentiment/vader_lexicon.txt (MIT)
  pattern3 3.0.0       pattern3/text/en/en-frequency.txt, wordnet/dict/* (BSD / WordNet license)

Usage: build_resources.py <unpacked-source-root> <output-dir>

Outputs:
  pos_lexicon.tsv        word<TAB>TAG with TAG in {NOUN, ADJ, VERB, ADV, OTHER}
  sentiment_lexicon.tsv  lemma<TAB>pos<TAB>neg, scores in [0, 1]
  embeddings50.txt       word v1 ... v50 (PPMI + truncated SVD over WordNet relations)
"""
import collections
import math
import os
import re
import sys
import xml.etree.ElementTree as ET

import numpy as np
import scipy.sparse as sp
from scipy.sparse.linalg import svds

PENN = {
    "NN": "NOUN", "NNS": "NOUN", "NNP": "NOUN", "NNPS": "NOUN",
    "JJ": "ADJ", "JJR": "ADJ", "JJS": "ADJ",
    "VB": "VERB", "VBD": "VERB", "VBG": "VERB", "VBN": "VERB", "VBP": "VERB", "VBZ": "VERB", "MD": "VERB",
    "RB": "ADV", "RBR": "ADV", "RBS": "ADV", "WRB": "ADV",
}

# Product-review vocabulary the Brill lexicon lacks or tags against review usage.
OVERRIDES = {
    "fast": "ADJ", "hd": "ADJ", "fhd": "ADJ", "uhd": "ADJ", "lightweight": "ADJ",
    "laptop": "NOUN", "ssd": "NOUN", "hdd": "NOUN", "cpu": "NOUN", "gpu": "NOUN",
    "ram": "NOUN", "usb": "NOUN", "bluetooth": "NOUN", "wifi": "NOUN", "touchscreen": "NOUN",
    "webcam": "NOUN", "trackpad": "NOUN", "touchpad": "NOUN", "chromebook": "NOUN",
    "battery-life": "NOUN", "keyboard": "NOUN", "charger": "NOUN", "backlight": "NOUN",
    "processor": "NOUN", "resolution": "NOUN", "screen": "NOUN", "display": "NOUN",
    "price": "NOUN", "sound": "NOUN", "speaker": "NOUN", "speakers": "NOUN",
}

# Always kept in the embedding vocabulary when WordNet knows them.
DOMAIN_WORDS = set("""
warranty laptop notebook computer tablet monitor screen display resolution brightness
battery charge charger power memory storage drive disk processor speed performance
keyboard key trackpad mouse camera webcam speaker sound audio volume price cost value
money weight size design color colour graphics fan noise heat temperature port cable
software hardware system windows quality build case lid hinge shipping delivery service
support customer seller packaging box touch pen stylus wireless network internet
""".split())

WORD_RE = re.compile(r"^[a-z][a-z'-]*$")


def build_pos_lexicon(src, limit=50000):
    path = os.path.join(src, "textblob/en/en-lexicon.txt")
    entries = {}
    lower_seen = set()
    with open(path, encoding="utf-8") as f:
        for line in f:
            if line.startswith(";;;"):
                continue
            parts = line.split()
            if len(parts) < 2:
                continue
            word, tag = parts[0], parts[1]
            lw = word.lower()
            if not WORD_RE.match(lw):
                continue
            # The lowercase form's tag beats a capitalized one ("Great" NNP vs "great" JJ).
            if word == lw:
                entries[lw] = PENN.get(tag, "OTHER")
                lower_seen.add(lw)
            elif lw not in entries and lw not in lower_seen:
                entries[lw] = PENN.get(tag, "OTHER")
    entries.update(OVERRIDES)
    words = sorted(entries)
    if len(words) > limit:
        # keep the shortest (most common-looking) forms first
        words = sorted(sorted(words, key=lambda w: (len(w), w))[:limit])
    return {w: entries[w] for w in words}


def build_sentiment_lexicon(src):
    scores = {}
    with open(os.path.join(src, "vaderSentiment/vader_lexicon.txt"), encoding="utf-8") as f:
        for line in f:
            parts = line.rstrip("\n").split("\t")
            if len(parts) < 2:
                continue
            word = parts[0].lower()
            if not WORD_RE.match(word):
                continue
            v = float(parts[1])
            scores[word] = (max(v, 0.0) / 4.0, max(-v, 0.0) / 4.0)
    acc = collections.defaultdict(list)
    tree = ET.parse(os.path.join(src, "textblob/en/en-sentiment.xml"))
    for w in tree.getroot().iter("word"):
        form = w.get("form", "").lower()
        if not WORD_RE.match(form):
            continue
        acc[form].append(float(w.get("polarity", "0")))
    for form, pols in acc.items():
        if form in scores:
            continue
        p = sum(pols) / len(pols)
        if p == 0.0:
            continue
        scores[form] = (max(p, 0.0), max(-p, 0.0))
    return {w: (min(p, 1.0), min(n, 1.0)) for w, (p, n) in sorted(scores.items())}


def read_wordnet(src):
    d = os.path.join(src, "pattern3-3.0.0/pattern3/text/en/wordnet/dict")
    blobs = {
        "n": open(os.path.join(d, "data.noun1"), "rb").read() + open(os.path.join(d, "data.noun2"), "rb").read(),
        "v": open(os.path.join(d, "data.verb"), "rb").read(),
        "a": open(os.path.join(d, "data.adj"), "rb").read(),
        "r": open(os.path.join(d, "data.adv"), "rb").read(),
    }
    synsets = {}
    for pos, blob in blobs.items():
        for raw in blob.split(b"\n"):
            if not raw or raw.startswith(b"  "):
                continue
            line = raw.decode("latin-1")
            head, _, gloss = line.partition(" | ")
            f = head.split()
            off = f[0]
            wcnt = int(f[3], 16)
            words = [f[4 + 2 * i].lower() for i in range(wcnt)]
            words = [re.sub(r"\(.*\)$", "", w) for w in words]
            i = 4 + 2 * wcnt
            pcnt = int(f[i])
            ptrs = []
            for j in range(pcnt):
                sym, toff, tpos = f[i + 1 + 4 * j], f[i + 2 + 4 * j], f[i + 3 + 4 * j]
                ptrs.append((sym, (("n" if tpos == "n" else "v" if tpos == "v" else "r" if tpos == "r" else "a"), toff)))
            synsets[(pos, off)] = (words, ptrs, gloss)
    return synsets


def sense_counts(src):
    d = os.path.join(src, "pattern3-3.0.0/pattern3/text/en/wordnet/dict")
    counts = collections.Counter()
    with open(os.path.join(d, "index.sense"), encoding="latin-1") as f:
        for line in f:
            key, _, _, cnt = line.split()
            counts[key.split("%")[0].lower()] += int(cnt)
    return counts


def word_frequencies(src):
    freq = {}
    with open(os.path.join(src, "pattern3-3.0.0/pattern3/text/en/en-frequency.txt"), encoding="utf-8") as f:
        for line in f:
            parts = line.split()
            if len(parts) == 2:
                freq.setdefault(parts[0].lower(), float(parts[1]))
    return freq


def build_embeddings(src, pos_lex, vocab_size=20000, dim=50):
    synsets = read_wordnet(src)
    counts = sense_counts(src)
    by_word = collections.defaultdict(list)
    for key, (words, _, _) in synsets.items():
        for w in words:
            if "_" in w or not WORD_RE.match(w):
                continue
            by_word[w].append(key)
    cand = [w for w in by_word if len(w) > 1]
    freq = word_frequencies(src)
    cand.sort(key=lambda w: (w not in freq, not (counts[w] > 0 or w in pos_lex), -freq.get(w, 0.0), -counts[w], len(w), w))
    domain = set(OVERRIDES) | DOMAIN_WORDS
    picked = [w for w in cand if w in domain]
    picked += [w for w in cand if w not in domain][: vocab_size - len(picked)]
    vocab = sorted(picked)
    index = {w: i for i, w in enumerate(vocab)}

    ctx_index = {}
    rows, cols, vals = [], [], []

    def add(w, ctx, weight):
        c = ctx_index.setdefault(ctx, len(ctx_index))
        rows.append(index[w]); cols.append(c); vals.append(weight)

    stop = set("a an the of to in and or for with by on at as is be that which from its it this".split())
    for w in vocab:
        for key in by_word[w]:
            words, ptrs, gloss = synsets[key]
            add(w, ("s",) + key, 1.0)
            for sym, tgt in ptrs:
                if sym.startswith("@") or sym.startswith("%") or sym.startswith("#") or sym == "&" or sym == "\\" or sym == "+":
                    add(w, ("s",) + tgt, 0.6)
                    if tgt in synsets:
                        for sym2, tgt2 in synsets[tgt][1]:
                            if sym2.startswith("@"):
                                add(w, ("s",) + tgt2, 0.3)
            for g in re.findall(r"[a-z]+", gloss.split(";")[0].lower()):
                if g not in stop and len(g) > 2:
                    add(w, ("g", g), 0.3)
            for other in words:
                if other != w:
                    add(w, ("w", other), 0.8)
    m = sp.coo_matrix((vals, (rows, cols)), shape=(len(vocab), len(ctx_index))).tocsr()
    m.sum_duplicates()
    total = m.sum()
    row = np.asarray(m.sum(axis=1)).ravel()
    col = np.asarray(m.sum(axis=0)).ravel()
    m = m.tocoo()
    pmi = np.log((m.data * total) / (row[m.row] * col[m.col]))
    keep = pmi > 0
    ppmi = sp.coo_matrix((pmi[keep], (m.row[keep], m.col[keep])), shape=m.shape).tocsr()
    u, s, _ = svds(ppmi, k=dim, random_state=0)
    order = np.argsort(-s)
    vecs = u[:, order] * np.sqrt(s[order])
    # fix the sign of each component for determinism
    signs = np.sign(vecs[np.argmax(np.abs(vecs), axis=0), range(dim)])
    vecs = vecs * signs
    norms = np.linalg.norm(vecs, axis=1, keepdims=True)
    norms[norms == 0] = 1
    vecs = vecs / norms
    return vocab, vecs


def main():
    src, out = sys.argv[1], sys.argv[2]
    os.makedirs(out, exist_ok=True)
    pos_lex = build_pos_lexicon(src)
    with open(os.path.join(out, "pos_lexicon.tsv"), "w") as f:
        for w, t in pos_lex.items():
            f.write(f"{w}\t{t}\n")
    senti = build_sentiment_lexicon(src)
    with open(os.path.join(out, "sentiment_lexicon.tsv"), "w") as f:
        for w, (p, n) in senti.items():
            f.write(f"{w}\t{p:.4f}\t{n:.4f}\n")
    vocab, vecs = build_embeddings(src, pos_lex)
    with open(os.path.join(out, "embeddings50.txt"), "w") as f:
        for w, v in zip(vocab, vecs):
            f.write(w + " " + " ".join(f"{x:.4f}" for x in v) + "\n")
    print(len(pos_lex), len(senti), len(vocab))


if __name__ == "__main__":
    main()
