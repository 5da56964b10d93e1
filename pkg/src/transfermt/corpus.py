"""Parallel corpus ingestion and preprocessing.

Covers tokenization, truecasing, length filtering, rare-word UNK
augmentation, and out-of-vocabulary replacement. All operations are pure:
they take a corpus and return a new one, leaving the input untouched.
"""

from __future__ import annotations

import unicodedata
from collections import Counter
from dataclasses import dataclass

from . import UNK


def _is_punct(ch):
    return unicodedata.category(ch).startswith("P")


def tokenize(line):
    """Split a raw text line into tokens.

    Splits on Unicode whitespace, then detaches leading/trailing punctuation
    characters from each chunk as standalone tokens. Characters inside a word
    (hyphens, apostrophes, internal dots) stay attached, which makes the rule
    set idempotent on already-tokenized text.
    """
    tokens = []
    for chunk in line.split():
        head = []
        tail = []
        start, end = 0, len(chunk)
        while start < end and _is_punct(chunk[start]):
            head.append(chunk[start])
            start += 1
        while end > start and _is_punct(chunk[end - 1]):
            tail.append(chunk[end - 1])
            end -= 1
        tokens.extend(head)
        if start < end:
            tokens.append(chunk[start:end])
        tokens.extend(reversed(tail))
    return tokens


# Punctuation that attaches to the preceding token when detokenizing.
_ATTACH_LEFT = set(".,;:!?%)]}»…'\"”’´`")
# Punctuation that attaches to the following token.
_ATTACH_RIGHT = set("([{«¿¡“‘")


def detokenize(tokens):
    """Join tokens back into surface text, attaching punctuation.

    Inverse of :func:`tokenize` for the common cases: closing punctuation
    glues to the previous token, opening punctuation to the next one.
    """
    out = []
    glue_next = False
    for tok in tokens:
        if not out:
            out.append(tok)
        elif glue_next or (len(tok) == 1 and tok in _ATTACH_LEFT):
            out[-1] += tok
        else:
            out.append(tok)
        glue_next = len(tok) == 1 and tok in _ATTACH_RIGHT
    return " ".join(out)


@dataclass(frozen=True)
class SentencePair:
    """One aligned sentence pair; sides are whitespace-free token tuples."""

    source: tuple
    target: tuple
    origin_line: int = 1

    def __post_init__(self):
        if not self.source or not self.target:
            raise ValueError("sentence pair with an empty side (line %d)" % self.origin_line)
        if self.origin_line < 1:
            raise ValueError("origin_line must be >= 1")
        for tok in list(self.source) + list(self.target):
            if any(ch.isspace() for ch in tok):
                raise ValueError("token contains whitespace: %r" % tok)


@dataclass(frozen=True)
class CorpusStats:
    sentences: int
    src_tokens: int
    tgt_tokens: int


@dataclass(frozen=True)
class ParallelCorpus:
    """Ordered list of sentence pairs plus language-pair metadata.

    Stats are always derived from the pairs, never stored, so they cannot
    drift out of sync.
    """

    pairs: tuple
    src_lang: str = "src"
    tgt_lang: str = "tgt"

    @property
    def stats(self):
        return CorpusStats(
            sentences=len(self.pairs),
            src_tokens=sum(len(p.source) for p in self.pairs),
            tgt_tokens=sum(len(p.target) for p in self.pairs),
        )

    def __len__(self):
        return len(self.pairs)

    def side(self, which):
        """All sentences of one side ('src' or 'tgt') as token tuples."""
        if which == "src":
            return [p.source for p in self.pairs]
        if which == "tgt":
            return [p.target for p in self.pairs]
        raise ValueError("side must be 'src' or 'tgt'")

    def map_pairs(self, fn):
        """New corpus with fn(pair) applied to every pair."""
        return ParallelCorpus(tuple(fn(p) for p in self.pairs), self.src_lang, self.tgt_lang)


@dataclass(frozen=True)
class PreprocessConfig:
    max_len: int = 50
    rare_threshold: int = 5
    truecase: bool = False
    lowercase_fallback: bool = True

    def __post_init__(self):
        if self.max_len < 1:
            raise ValueError("max_len must be >= 1")
        if self.rare_threshold < 1:
            raise ValueError("rare_threshold must be >= 1")


def from_raw_lines(src_lines, tgt_lines, src_lang="src", tgt_lang="tgt"):
    """Tokenize aligned raw lines into a corpus.

    Pairs where either side tokenizes to nothing are dropped; the drop count
    is returned so callers can warn.
    """
    if len(src_lines) != len(tgt_lines):
        raise ValueError(
            "line count mismatch: %d source vs %d target" % (len(src_lines), len(tgt_lines))
        )
    pairs = []
    dropped = 0
    for i, (s, t) in enumerate(zip(src_lines, tgt_lines), start=1):
        src = tuple(tokenize(s))
        tgt = tuple(tokenize(t))
        if not src or not tgt:
            dropped += 1
            continue
        pairs.append(SentencePair(src, tgt, i))
    return ParallelCorpus(tuple(pairs), src_lang, tgt_lang), dropped


def read_parallel(src_path, tgt_path, src_lang="src", tgt_lang="tgt", pretokenized=False):
    """Read a two-file parallel corpus (one sentence per line, UTF-8)."""
    with open(src_path, encoding="utf-8") as f:
        src_lines = f.read().splitlines()
    with open(tgt_path, encoding="utf-8") as f:
        tgt_lines = f.read().splitlines()
    if pretokenized:
        if len(src_lines) != len(tgt_lines):
            raise ValueError("line count mismatch between %s and %s" % (src_path, tgt_path))
        pairs = []
        dropped = 0
        for i, (s, t) in enumerate(zip(src_lines, tgt_lines), start=1):
            src, tgt = tuple(s.split()), tuple(t.split())
            if not src or not tgt:
                dropped += 1
                continue
            pairs.append(SentencePair(src, tgt, i))
        return ParallelCorpus(tuple(pairs), src_lang, tgt_lang), dropped
    return from_raw_lines(src_lines, tgt_lines, src_lang, tgt_lang)


def write_parallel(corpus, src_path, tgt_path):
    with open(src_path, "w", encoding="utf-8") as f:
        for p in corpus.pairs:
            f.write(" ".join(p.source) + "\n")
    with open(tgt_path, "w", encoding="utf-8") as f:
        for p in corpus.pairs:
            f.write(" ".join(p.target) + "\n")


# ---------------------------------------------------------------------------
# Truecasing


def _has_alpha(tok):
    return any(ch.isalpha() for ch in tok)


def truecase_fit(corpus):
    """Fit a per-surface-form case model from a corpus.

    For every lowercased form the model records the casing variant most
    frequent in non-sentence-initial positions (both sides contribute).
    Forms seen only sentence-initially fall back to lowercase; ties break
    toward lowercase, then lexicographically.
    """
    if not corpus.pairs:
        raise ValueError("cannot fit a case model on an empty corpus")
    mid_counts = {}
    initial_forms = set()
    for p in corpus.pairs:
        for sent in (p.source, p.target):
            for i, tok in enumerate(sent):
                if not _has_alpha(tok):
                    continue
                low = tok.lower()
                if i == 0:
                    initial_forms.add(low)
                else:
                    mid_counts.setdefault(low, Counter())[tok] += 1
    model = {}
    for low, counts in mid_counts.items():
        best = min(counts.items(), key=lambda kv: (-kv[1], kv[0] != low, kv[0]))
        model[low] = best[0]
    for low in initial_forms:
        model.setdefault(low, low)
    return model


def truecase_apply(sentence, model):
    """Replace the sentence-initial token by its model casing."""
    if not sentence:
        return []
    first = model.get(sentence[0].lower(), sentence[0])
    return [first] + list(sentence[1:])


def detruecase(sentence):
    """Restore display casing: uppercase the first character of a sentence."""
    if not sentence:
        return []
    first = sentence[0]
    return [first[:1].upper() + first[1:]] + list(sentence[1:])


def truecase_corpus(corpus, model):
    return corpus.map_pairs(
        lambda p: SentencePair(
            tuple(truecase_apply(p.source, model)),
            tuple(truecase_apply(p.target, model)),
            p.origin_line,
        )
    )


def save_case_model(model, path):
    with open(path, "w", encoding="utf-8") as f:
        for low in sorted(model):
            f.write("%s\t%s\n" % (low, model[low]))


def load_case_model(path):
    model = {}
    with open(path, encoding="utf-8") as f:
        for line in f:
            line = line.rstrip("\n")
            if not line:
                continue
            low, cased = line.split("\t")
            model[low] = cased
    return model


# ---------------------------------------------------------------------------
# Filtering and UNK handling


def filter_by_length(corpus, max_len):
    """Keep exactly the pairs with both sides at most max_len tokens."""
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    kept = tuple(
        p for p in corpus.pairs if len(p.source) <= max_len and len(p.target) <= max_len
    )
    return ParallelCorpus(kept, corpus.src_lang, corpus.tgt_lang)


def unk_augment(corpus, rare_threshold=5):
    """Append a copy of the corpus with rare tokens replaced by UNK.

    Frequencies are counted per side over the whole corpus; a token is rare
    when its side count is below rare_threshold. The first copy is returned
    unchanged, so the output has exactly twice as many pairs.
    """
    if rare_threshold < 1:
        raise ValueError("rare_threshold must be >= 1")
    src_counts = Counter(t for p in corpus.pairs for t in p.source)
    tgt_counts = Counter(t for p in corpus.pairs for t in p.target)

    def mask(tokens, counts):
        return tuple(t if counts[t] >= rare_threshold else UNK for t in tokens)

    copies = tuple(
        SentencePair(mask(p.source, src_counts), mask(p.target, tgt_counts), p.origin_line)
        for p in corpus.pairs
    )
    return ParallelCorpus(corpus.pairs + copies, corpus.src_lang, corpus.tgt_lang)


def replace_oov(corpus, src_vocab, tgt_vocab=None):
    """Replace every token outside the vocabulary with UNK (word-based systems).

    Accepts any containers supporting ``in``; when tgt_vocab is omitted the
    source vocabulary is used for both sides.
    """
    if tgt_vocab is None:
        tgt_vocab = src_vocab

    def mask(tokens, vocab):
        return tuple(t if t in vocab else UNK for t in tokens)

    return corpus.map_pairs(
        lambda p: SentencePair(mask(p.source, src_vocab), mask(p.target, tgt_vocab), p.origin_line)
    )
