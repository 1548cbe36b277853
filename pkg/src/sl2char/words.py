"""Free-group words, finite presentations and Fox calculus.

A word is a tuple of letters ``(index, sign)``; the string form uses one
lowercase letter per generator and the uppercase letter for its inverse.
"""
import string
from dataclasses import dataclass, field

from .algebra.rational import ZERO, as_rat
from .errors import InputError

DEFAULT_GENERATORS = ("a", "b")


def _reduce(letters):
    out = []
    for g, s in letters:
        if out and out[-1][0] == g and out[-1][1] == -s:
            out.pop()
        else:
            out.append((g, s))
    return tuple(out)


class Word:
    """Freely reduced word over a fixed list of single-letter generators."""

    __slots__ = ("letters", "generators", "_hash")

    def __init__(self, letters=(), generators=DEFAULT_GENERATORS):
        self.generators = tuple(generators)
        n = len(self.generators)
        letters = tuple(letters)
        for g, s in letters:
            if not 0 <= g < n or s not in (1, -1):
                raise InputError(f"bad letter {(g, s)!r}")
        self.letters = _reduce(letters)
        self._hash = None

    @classmethod
    def empty(cls, generators=DEFAULT_GENERATORS):
        return cls((), generators)

    @classmethod
    def gen(cls, name, generators=DEFAULT_GENERATORS):
        return parse_word(name, generators)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __bool__(self):
        return bool(self.letters)

    def __mul__(self, other):
        return word_mul(self, other)

    def inverse(self):
        return word_inv(self)

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        return Word(self.letters * n, self.generators)

    def __eq__(self, other):
        if isinstance(other, str):
            return str(self) == other
        if not isinstance(other, Word):
            return NotImplemented
        return self.letters == other.letters and self.generators == other.generators

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.letters, self.generators))
        return self._hash

    def __lt__(self, other):
        return self.letters < other.letters

    def exponent_sum(self, g):
        i = self.generators.index(g) if isinstance(g, str) else g
        return sum(s for h, s in self.letters if h == i)

    def __str__(self):
        gens = self.generators
        return "".join(gens[g] if s > 0 else gens[g].upper() for g, s in self.letters)

    def __repr__(self):
        return f"Word({str(self)!r})"


def parse_word(s, generators=DEFAULT_GENERATORS):
    """Parse ``s``; lowercase letters are generators, uppercase their inverses."""
    if isinstance(s, Word):
        return s
    generators = tuple(generators)
    index = {g: i for i, g in enumerate(generators)}
    letters = []
    for ch in s.strip():
        if ch not in string.ascii_letters:
            raise InputError(f"invalid character {ch!r} in word {s!r}")
        low = ch.lower()
        if low not in index:
            raise InputError(f"undeclared generator '{low}'")
        letters.append((index[low], 1 if ch.islower() else -1))
    return Word(letters, generators)


def _check_same(u, v):
    if u.generators != v.generators:
        raise InputError("words over different generator sets")


def word_mul(u, v):
    if isinstance(u, str):
        u = parse_word(u, v.generators if isinstance(v, Word) else DEFAULT_GENERATORS)
    if isinstance(v, str):
        v = parse_word(v, u.generators)
    _check_same(u, v)
    return Word(u.letters + v.letters, u.generators)


def word_inv(w):
    if isinstance(w, str):
        w = parse_word(w)
    return Word(tuple((g, -s) for g, s in reversed(w.letters)), w.generators)


def cyclic_reduce(w):
    """Cyclically reduced word and the conjugator prefix length."""
    letters = w.letters
    i, j = 0, len(letters)
    while j - i >= 2 and letters[i][0] == letters[j - 1][0] and letters[i][1] == -letters[j - 1][1]:
        i += 1
        j -= 1
    return Word(letters[i:j], w.generators)


def syllables(w):
    """Run-length form ``[(generator, exponent), ...]``."""
    out = []
    for g, s in w.letters:
        if out and out[-1][0] == g:
            out[-1][1] += s
        else:
            out.append([g, s])
    return [(g, e) for g, e in out]


# -- group ring -------------------------------------------------------------

class GroupRingElem:
    """Finite rational combination of group elements (free-group words)."""

    __slots__ = ("terms", "generators")

    def __init__(self, terms=None, generators=DEFAULT_GENERATORS):
        self.generators = tuple(generators)
        clean = {}
        for w, c in (terms or {}).items():
            c = as_rat(c)
            if c:
                clean[w] = clean.get(w, ZERO) + c
                if not clean[w]:
                    del clean[w]
        self.terms = clean

    @classmethod
    def of(cls, w, coeff=1):
        return cls({w: coeff}, w.generators)

    def __add__(self, other):
        t = dict(self.terms)
        for w, c in other.terms.items():
            t[w] = t.get(w, ZERO) + c
        return GroupRingElem(t, self.generators)

    def __neg__(self):
        return GroupRingElem({w: -c for w, c in self.terms.items()}, self.generators)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, GroupRingElem):
            t = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    w = word_mul(w1, w2)
                    t[w] = t.get(w, ZERO) + c1 * c2
            return GroupRingElem(t, self.generators)
        c = as_rat(other)
        return GroupRingElem({w: c * v for w, v in self.terms.items()}, self.generators)

    def left_mul(self, w):
        return GroupRingElem({word_mul(w, v): c for v, c in self.terms.items()}, self.generators)

    def items(self):
        return sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0].letters))

    def __eq__(self, other):
        if not isinstance(other, GroupRingElem):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k, (w, c) in enumerate(self.items()):
            name = str(w) or "1"
            neg = c < 0
            a = -c if neg else c
            body = name if a == 1 else f"{a}*{name}"
            if k == 0:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f" - {body}" if neg else f" + {body}")
        return "".join(parts)

    def __repr__(self):
        return f"GroupRingElem({str(self)!r})"


def fox_terms(w, g):
    """Fox derivative as a list of ``(coefficient, prefix word)`` pairs."""
    if isinstance(g, str):
        g = w.generators.index(g)
    out = []
    for k, (h, s) in enumerate(w.letters):
        if h != g:
            continue
        if s > 0:
            out.append((1, Word(w.letters[:k], w.generators)))
        else:
            out.append((-1, Word(w.letters[:k + 1], w.generators)))
    return out


def fox_derivative(w, g):
    """Fox derivative of ``w`` with respect to generator ``g``."""
    t = {}
    for c, v in fox_terms(w, g):
        t[v] = t.get(v, ZERO) + c
    return GroupRingElem(t, w.generators)


# -- presentations ----------------------------------------------------------

@dataclass(frozen=True)
class BoundaryCurve:
    name: str
    word: Word
    genus: int = 1


@dataclass(frozen=True)
class Presentation:
    generators: tuple
    relators: tuple = ()
    boundary: tuple = field(default_factory=tuple)

    @classmethod
    def build(cls, generators, relators=(), boundary=()):
        generators = tuple(generators)
        if not generators:
            raise InputError("a presentation needs at least one generator")
        if len(set(generators)) != len(generators):
            raise InputError("duplicate generator names")
        for g in generators:
            if len(g) != 1 or g not in string.ascii_lowercase:
                raise InputError(f"generator names must be single lowercase letters, got {g!r}")
        rels = tuple(parse_word(r, generators) for r in relators)
        curves = []
        for k, b in enumerate(boundary):
            if isinstance(b, BoundaryCurve):
                name, word, genus = b.name, b.word, b.genus
            elif isinstance(b, dict):
                name = b.get("name", f"c{k}")
                word, genus = b.get("word"), b.get("genus", 1)
            else:
                name, word, genus = f"c{k}", b, 1
            if word is None:
                raise InputError(f"boundary curve {name!r} has no word")
            if not isinstance(genus, int) or isinstance(genus, bool) or genus < 1:
                raise InputError(f"boundary curve {name!r} needs a positive integer genus")
            curves.append(BoundaryCurve(str(name), parse_word(word, generators), genus))
        return cls(generators, rels, tuple(curves))

    @property
    def is_free(self):
        return not self.relators

    def word(self, s):
        return parse_word(s, self.generators)

    def expected_h1(self):
        """``sum max(1, 3g - 3)`` over the boundary curves."""
        return sum(max(1, 3 * c.genus - 3) for c in self.boundary)
