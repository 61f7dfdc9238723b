"""Arabic noun inflection: shipped grammar, lexicon and transliteration.

All surface strings use a one-character-per-letter Latin transliteration of
Arabic script (not a phonetic scheme); see the README for the full table.
Letter case is significant: H, S, D, T, Z are emphatic consonants, G marks
gemination of the preceding letter, 0 is the feminine ending, and the
nunation vowels are M (nominative), F (accusative), K (genitive).

Plural formation is lexeme-driven. An entry either lists a second stem used
for the plural (internal-change plurals such as rajul / rijaAl) or names one
of the two suffixing plural classes, uwna or aAt. Which strategy and which
class a noun takes is not predictable from its shape, so both are lexical
data.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from .errors import CorpusError, LexiconError
from .featstruct import FeatureStructure
from .hierarchy import generate

NUMBERS = ("sg", "dual", "pl")
CASES = ("nom", "acc", "gen")
DEFS = ("-", "+")

SP_CLASSES = ("uwna", "aAt")

# Transliteration alphabet. Letters and diacritics are disjoint; the sun
# letters are the fourteen consonants that assimilate the article's l.
LETTERS = "Abt#jHxd>rzsšSDTZ`<fqklmnhwyY0^ç~V@v"
DIACRITICS = "aiuFKMoG"
SUN_LETTERS = "t#d>rzsšSDTZln"


@dataclass(frozen=True)
class TransliterationAlphabet:
    letters: frozenset
    diacritics: frozenset
    sun_letters: frozenset


ALPHABET = TransliterationAlphabet(
    frozenset(LETTERS), frozenset(DIACRITICS), frozenset(SUN_LETTERS))


def validate_transliteration(s):
    """Positions of characters outside the transliteration alphabet."""
    legal = ALPHABET.letters | ALPHABET.diacritics
    return [i for i, ch in enumerate(s) if ch not in legal]


def definite_prefix(stem, assimilation=False):
    """Prefix the definite article to a bare stem.

    Without assimilation the article is Alo (sukuwn on the l). With
    assimilation, a stem beginning with a sun letter takes Al plus
    gemination of that letter; moon letters are unaffected either way.
    """
    if not stem:
        raise ValueError("empty stem")
    first = stem[0]
    if assimilation and first in ALPHABET.sun_letters:
        return "Al" + first + "G" + stem[1:]
    return "Alo" + stem


def apply_assimilation(surface):
    """Rewrite a generated Alo- form to its sun-letter assimilated shape."""
    if surface.startswith("Alo") and len(surface) > 3:
        return definite_prefix(surface[3:], assimilation=True)
    return surface


# ---------------------------------------------------------------------------
# lexicon

@dataclass(frozen=True)
class LexiconEntry:
    lemma: str
    stem: str
    bpstem: str | None
    sp: str | None
    gender: str
    gloss: str = ""
    cat: str = "n"


def load_lexicon(text):
    """Parse lexicon text into validated entries.

    One record per line: lemma, stem, bpstem or -, sp or -, gender, gloss,
    separated by tabs. ``#`` starts a comment line. Every entry must carry
    exactly one of bpstem / sp, and all word material must stay inside the
    transliteration alphabet.
    """
    entries = []
    seen = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 6:
            raise LexiconError(
                f"expected 6 tab-separated fields, got {len(fields)}", lineno)
        lemma, stem, bpstem, sp, gender, gloss = (f.strip() for f in fields)
        if not lemma:
            raise LexiconError("empty lemma", lineno)
        if lemma in seen:
            raise LexiconError(
                f"duplicate lemma '{lemma}' (first at line {seen[lemma]})", lineno)
        bpstem = bpstem if bpstem != "-" else None
        sp = sp if sp != "-" else None
        if bpstem and sp:
            raise LexiconError(
                f"'{lemma}' has both a plural stem and a plural class", lineno)
        if not bpstem and not sp:
            raise LexiconError(
                f"'{lemma}' has neither a plural stem nor a plural class", lineno)
        if sp and sp not in SP_CLASSES:
            raise LexiconError(
                f"'{lemma}': unknown plural class '{sp}'", lineno)
        if gender not in ("m", "f"):
            raise LexiconError(
                f"'{lemma}': gender must be m or f, got '{gender}'", lineno)
        for label, value in (("stem", stem), ("bpstem", bpstem)):
            if not value:
                continue
            bad = validate_transliteration(value)
            if bad:
                raise LexiconError(
                    f"'{lemma}': {label} '{value}' has characters outside the "
                    f"alphabet at position(s) {bad}", lineno)
        if not stem:
            raise LexiconError(f"'{lemma}': empty stem", lineno)
        seen[lemma] = lineno
        entries.append(LexiconEntry(lemma, stem, bpstem, sp, gender, gloss))
    return entries


def inflection_fs(entry, number, case, definite):
    """The feature structure that requests one cell of an entry's paradigm."""
    pairs = [
        ("stem", entry.stem),
        ("cat", entry.cat),
        ("gender", entry.gender),
        ("number", number),
        ("case", case),
        ("def", definite),
    ]
    if entry.bpstem:
        pairs.append(("bpstem", entry.bpstem))
    if entry.sp:
        pairs.append(("sp", entry.sp))
    return FeatureStructure(tuple(pairs))


# ---------------------------------------------------------------------------
# paradigms

@dataclass(frozen=True)
class ParadigmTable:
    """All 18 inflected forms of one entry, keyed by (number, case, def)."""

    lemma: str
    cells: dict

    def cell(self, number, case, definite):
        return self.cells[(number, case, definite)]


def paradigm(entry, h, *, assimilation=False, strict=False):
    """Generate the full 18-cell paradigm of ``entry`` with hierarchy ``h``."""
    cells = {}
    for number in NUMBERS:
        for case in CASES:
            for definite in DEFS:
                form = generate(h, inflection_fs(entry, number, case, definite),
                                strict=strict)
                if assimilation:
                    form = apply_assimilation(form)
                cells[(number, case, definite)] = form
    return ParadigmTable(entry.lemma, cells)


# ---------------------------------------------------------------------------
# expected-forms corpus

@dataclass(frozen=True)
class GoldRow:
    lemma: str
    number: str
    case: str
    definite: str
    expected: str
    line: int


def parse_gold_corpus(text):
    """Parse an expected-forms corpus: lemma number case def surface rows."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 5:
            raise CorpusError(
                f"expected 5 tab-separated fields, got {len(fields)}", lineno)
        lemma, number, case, definite, expected = (f.strip() for f in fields)
        if number not in NUMBERS:
            raise CorpusError(f"bad number '{number}'", lineno)
        if case not in CASES:
            raise CorpusError(f"bad case '{case}'", lineno)
        if definite not in DEFS:
            raise CorpusError(f"bad def '{definite}'", lineno)
        rows.append(GoldRow(lemma, number, case, definite, expected, lineno))
    return rows


# ---------------------------------------------------------------------------
# bundled data

def data_text(name):
    """Contents of a bundled data file (grammar, lexicon, corpus)."""
    return resources.files(__package__).joinpath("data").joinpath(name).read_text("utf-8")


def data_path(name):
    """Filesystem path of a bundled data file."""
    return str(resources.files(__package__).joinpath("data").joinpath(name))


GRAMMAR_FILE = "arabic_nouns.mfh"
LEXICON_FILE = "arabic_nouns.lex"
GOLD_FILE = "arabic_gold.tsv"
ENGLISH_TOY_FILE = "english_toy.mfh"


def arabic_noun_grammar():
    """The shipped Arabic noun grammar, as declaration-language text."""
    return data_text(GRAMMAR_FILE)


def bundled_lexicon():
    """The shipped lexicon, parsed."""
    return load_lexicon(data_text(LEXICON_FILE))
