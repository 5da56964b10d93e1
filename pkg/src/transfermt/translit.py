"""Context-free, character-level transliteration.

A transliteration table maps source graphemes (single code points or
declared multi-code-point clusters) to replacement strings. Application is
a string homomorphism: the text is scanned left to right, the longest
matching table key at each position is replaced, and characters absent from
the table pass through verbatim.
"""

from __future__ import annotations

from importlib import resources

DEFAULT_TABLE_RESOURCE = "uyghur_latin.tsv"


class TranslitTable:
    """Ordered grapheme-to-string mapping with longest-match-first lookup."""

    def __init__(self, entries):
        self.entries = {}
        for key, repl in entries:
            if not key:
                raise ValueError("empty source grapheme")
            if key in self.entries:
                raise ValueError("duplicate table key: %r" % key)
            self.entries[key] = repl
        single = {k for k in self.entries if len(k) == 1}
        for key, repl in self.entries.items():
            for ch in repl:
                if ch in single:
                    raise ValueError(
                        "replacement %r for %r contains a source grapheme" % (repl, key)
                    )
        self._max_key_len = max((len(k) for k in self.entries), default=1)

    def __len__(self):
        return len(self.entries)

    def transliterate(self, text):
        out = []
        i = 0
        n = len(text)
        while i < n:
            for width in range(min(self._max_key_len, n - i), 0, -1):
                repl = self.entries.get(text[i : i + width])
                if repl is not None:
                    out.append(repl)
                    i += width
                    break
            else:
                out.append(text[i])
                i += 1
        return "".join(out)


def transliterate(text, table):
    return table.transliterate(text)


def load_table(path):
    """Parse a table file: one "grapheme<TAB>replacement" per line, '#' comments."""
    entries = []
    with open(path, encoding="utf-8") as f:
        for lineno, line in enumerate(f, start=1):
            line = line.rstrip("\n")
            if not line or line.startswith("#"):
                continue
            if "\t" not in line:
                raise ValueError("%s:%d: expected tab-separated entry" % (path, lineno))
            key, _, repl = line.partition("\t")
            entries.append((key, repl))
    return TranslitTable(entries)


def default_table():
    """The bundled approximate Arabic-script-to-Latin table for Uyghur."""
    ref = resources.files(__package__) / "data" / DEFAULT_TABLE_RESOURCE
    entries = []
    for line in ref.read_text(encoding="utf-8").splitlines():
        if not line or line.startswith("#"):
            continue
        key, _, repl = line.partition("\t")
        entries.append((key, repl))
    return TranslitTable(entries)
