"""Multilinear binary nonassociative words and the Zinbiel normal form.

Variables are integers 0, 1, 2, ... rendered as letters a < b < c < ...
A binary monomial is either a leaf (an int) or a pair ``(left, right)``
of binary monomials.  A right-normed monomial x1(x2(...(x_{n-1}x_n)))
is stored as the tuple of its letters, i.e. a permutation of the
alphabet in the multilinear case.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from math import factorial

ALPHABET = "abcdefghijklmnopqrstuvwxyz"

BinaryMonomial = int | tuple
Word = tuple[int, ...]


class MalformedInputError(ValueError):
    """Raised for non-multilinear or otherwise invalid monomials."""


# ---------------------------------------------------------------------------
# basic tree utilities


def leaves(m: BinaryMonomial) -> tuple[int, ...]:
    if isinstance(m, int):
        return (m,)
    return leaves(m[0]) + leaves(m[1])


def arity(m: BinaryMonomial) -> int:
    return len(leaves(m))


def check_multilinear(m: BinaryMonomial) -> None:
    ls = leaves(m)
    if len(set(ls)) != len(ls):
        raise MalformedInputError(f"repeated variable in monomial {format_binary(m)}")


def word_to_tree(w: Word) -> BinaryMonomial:
    """Right-normed binary tree for a word: (w0, (w1, (..., wn))) ."""
    t: BinaryMonomial = w[-1]
    for x in reversed(w[:-1]):
        t = (x, t)
    return t


# ---------------------------------------------------------------------------
# parsing / printing: parenthesized juxtaposition, e.g. "(((ab)c)d)e"


def parse_binary(text: str) -> BinaryMonomial:
    pos = 0

    def factor() -> BinaryMonomial:
        nonlocal pos
        if pos >= len(text):
            raise MalformedInputError(f"unexpected end of input at position {pos}")
        ch = text[pos]
        if ch == "(":
            pos += 1
            m = expression(")")
            if pos >= len(text) or text[pos] != ")":
                raise MalformedInputError(f"expected ')' at position {pos}")
            pos += 1
            return m
        if ch.isalpha():
            pos += 1
            return ALPHABET.index(ch)
        raise MalformedInputError(f"unexpected character {ch!r} at position {pos}")

    def expression(closer: str | None) -> BinaryMonomial:
        nonlocal pos
        parts = [factor()]
        while pos < len(text) and text[pos] != closer:
            parts.append(factor())
        if len(parts) == 1:
            return parts[0]
        if len(parts) != 2:
            raise MalformedInputError(
                f"expected exactly two factors in a product, got {len(parts)}"
            )
        return (parts[0], parts[1])

    text = text.replace(" ", "")
    m = expression(None)
    if pos != len(text):
        raise MalformedInputError(f"trailing input at position {pos}")
    check_multilinear(m)
    return m


def format_binary(m: BinaryMonomial) -> str:
    if isinstance(m, int):
        return ALPHABET[m]
    left, right = m

    def wrap(t: BinaryMonomial) -> str:
        s = format_binary(t)
        return s if isinstance(t, int) else f"({s})"

    return wrap(left) + wrap(right)


def format_word(w: Word) -> str:
    """Render a right-normed word, e.g. (0,1,2) -> 'a(b(c))' style 'a(bc)'."""
    if len(w) == 1:
        return ALPHABET[w[0]]
    if len(w) == 2:
        return ALPHABET[w[0]] + ALPHABET[w[1]]
    return ALPHABET[w[0]] + "(" + format_word(w[1:]) + ")"


# ---------------------------------------------------------------------------
# permutation ranking (lex order, 1-based)


def lex_rank(p: Word) -> int:
    """Rank of a permutation of sorted(p) in lex order, in 1..n!."""
    n = len(p)
    letters = sorted(p)
    if len(set(letters)) != n:
        raise MalformedInputError("not a permutation: repeated letters")
    rank = 0
    avail = list(letters)
    for i, x in enumerate(p):
        k = avail.index(x)
        rank += k * factorial(n - 1 - i)
        avail.pop(k)
    return rank + 1


def lex_unrank(n: int, rank: int) -> Word:
    """Inverse of :func:`lex_rank` on the alphabet 0..n-1."""
    if not 1 <= rank <= factorial(n):
        raise MalformedInputError(f"rank {rank} out of range for n={n}")
    r = rank - 1
    avail = list(range(n))
    out = []
    for i in range(n):
        f = factorial(n - 1 - i)
        k, r = divmod(r, f)
        out.append(avail.pop(k))
    return tuple(out)


def all_words(n: int) -> list[Word]:
    """All permutations of 0..n-1 in lex order (basis of Zinb(n))."""
    return list(permutations(range(n)))


# ---------------------------------------------------------------------------
# Zinbiel normal form


def _znf(m: BinaryMonomial) -> list[Word]:
    if isinstance(m, int):
        return [(m,)]
    w, z = m
    if isinstance(w, int):
        return [(w,) + t for t in _znf(z)]
    x, y = w
    out: list[Word] = []
    for r in _znf(x):
        rt = word_to_tree(r)
        for s in _znf(y):
            st = word_to_tree(s)
            for t in _znf(z):
                tt = word_to_tree(t)
                out.extend(_znf((rt, (st, tt))))
                out.extend(_znf((rt, (tt, st))))
    return out


def znf(m: BinaryMonomial) -> list[Word]:
    """Zinbiel normal form of a multilinear binary monomial.

    Returns the multiset (list) of right-normed words whose formal sum,
    all coefficients +1, equals the normal form of ``m``.
    """
    check_multilinear(m)
    return _znf(m)


class ZinbielElement:
    """Coefficient vector over the lex-ordered right-normed basis of Zinb(n)."""

    __slots__ = ("arity", "coeffs")

    def __init__(self, arity_: int, coeffs=None):
        self.arity = arity_
        self.coeffs = list(coeffs) if coeffs is not None else [0] * factorial(arity_)
        if len(self.coeffs) != factorial(arity_):
            raise MalformedInputError("coefficient vector has wrong length")

    @classmethod
    def from_terms(cls, arity_: int, terms) -> "ZinbielElement":
        """Aggregate (word, coeff) pairs into a coefficient vector."""
        el = cls(arity_)
        for w, c in terms:
            el.coeffs[lex_rank(w) - 1] += c
        return el

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __add__(self, other: "ZinbielElement") -> "ZinbielElement":
        if self.arity != other.arity:
            raise MalformedInputError("arity mismatch")
        return ZinbielElement(self.arity, [x + y for x, y in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "ZinbielElement") -> "ZinbielElement":
        if self.arity != other.arity:
            raise MalformedInputError("arity mismatch")
        return ZinbielElement(self.arity, [x - y for x, y in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "ZinbielElement":
        return ZinbielElement(self.arity, [-x for x in self.coeffs])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ZinbielElement)
            and self.arity == other.arity
            and all(Fraction(x) == Fraction(y) for x, y in zip(self.coeffs, other.coeffs))
        )

    def sign_string(self) -> str:
        """Render an all-plus-minus-one vector as a '+'/'-' string."""
        out = []
        for c in self.coeffs:
            if c == 1:
                out.append("+")
            elif c == -1:
                out.append("-")
            else:
                raise ValueError(f"coefficient {c} is not +-1")
        return "".join(out)

    def terms(self) -> list[tuple[Word, int]]:
        n = self.arity
        return [
            (lex_unrank(n, i + 1), c) for i, c in enumerate(self.coeffs) if c != 0
        ]

    def __str__(self) -> str:
        parts = []
        for w, c in self.terms():
            sign = "+" if c > 0 else "-"
            mag = "" if abs(c) == 1 else f"{abs(c)} "
            parts.append(f"{sign} {mag}{format_word(w)}")
        return " ".join(parts) if parts else "0"


def znf_element(m: BinaryMonomial) -> ZinbielElement:
    """Zinbiel normal form aggregated as a coefficient vector."""
    return ZinbielElement.from_terms(arity(m), ((w, 1) for w in znf(m)))


# ---------------------------------------------------------------------------
# association types


def association_types(n: int) -> list[BinaryMonomial]:
    """All binary association types in arity n, filled with 0..n-1 in order.

    Types are ordered with the arity of the left factor decreasing,
    recursively on both factors; arity 5 yields the standard 14 types.
    """

    def shapes(k: int, offset: int) -> list[BinaryMonomial]:
        if k == 1:
            return [offset]
        out = []
        for l in range(k - 1, 0, -1):
            for left in shapes(l, offset):
                for right in shapes(k - l, offset + l):
                    out.append((left, right))
        return out

    return shapes(n, 0)


def normal_form_table(n: int) -> list[tuple[BinaryMonomial, ZinbielElement]]:
    """(association type, znf) for the identity permutation, per type."""
    if n > 7:
        raise MalformedInputError("supported arities are n <= 7")
    return [(t, znf_element(t)) for t in association_types(n)]
