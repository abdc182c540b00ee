"""Skew-ternary monomials: straightening, ordered bases, S_n action.

A ternary monomial is either a leaf (an int) or a triple
``(c1, c2, c3)`` of ternary monomials.  The generating operation is
skew-symmetric in its first two arguments; straightening rewrites any
monomial as +-1 times a canonical one.

Canonical form: at every node the first two children are in increasing
subtree order, where subtrees compare first by arity (larger first) and
then lexicographically on their flattened leaf sequences.  Putting the
larger-arity child first keeps every canonical monomial inside the
standard association types of each arity.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

from .words import ALPHABET, MalformedInputError, Word

TernaryMonomial = int | tuple


def leaves(t: TernaryMonomial) -> tuple[int, ...]:
    if isinstance(t, int):
        return (t,)
    return leaves(t[0]) + leaves(t[1]) + leaves(t[2])


def arity(t: TernaryMonomial) -> int:
    return len(leaves(t))


def check_multilinear(t: TernaryMonomial) -> None:
    ls = leaves(t)
    if len(set(ls)) != len(ls):
        raise MalformedInputError(f"repeated variable in {format_ternary(t)}")


def relabel(t: TernaryMonomial, perm: Word) -> TernaryMonomial:
    """Apply the letter substitution i -> perm[i] to every leaf."""
    if isinstance(t, int):
        return perm[t]
    return (relabel(t[0], perm), relabel(t[1], perm), relabel(t[2], perm))


def _subtree_key(t: TernaryMonomial) -> tuple:
    # larger arity first, then lex on the flattened leaves
    fl = leaves(t)
    return (-len(fl), fl)


def straighten(t: TernaryMonomial) -> tuple[int, TernaryMonomial]:
    """Canonical form with sign: returns (sign, canonical) with t = sign * canonical."""
    if isinstance(t, int):
        return 1, t
    s1, c1 = straighten(t[0])
    s2, c2 = straighten(t[1])
    s3, c3 = straighten(t[2])
    sign = s1 * s2 * s3
    if _subtree_key(c1) > _subtree_key(c2):
        c1, c2 = c2, c1
        sign = -sign
    return sign, (c1, c2, c3)


def is_canonical(t: TernaryMonomial) -> bool:
    return straighten(t) == (1, t)


# ---------------------------------------------------------------------------
# parsing / printing


def format_ternary(t: TernaryMonomial) -> str:
    """Comma form, e.g. [[a,b,c],d,e]."""
    if isinstance(t, int):
        return ALPHABET[t]
    return "[" + ",".join(format_ternary(c) for c in t) + "]"


def format_compact(t: TernaryMonomial) -> str:
    """Compact form, e.g. [[abd]g[efc]]."""
    if isinstance(t, int):
        return ALPHABET[t]
    return "[" + "".join(format_compact(c) for c in t) + "]"


def parse_ternary(text: str) -> TernaryMonomial:
    """Parse either the comma form [[a,b,c],d,e] or compact form [[abd]g[efc]]."""
    pos = 0
    s = text.replace(" ", "")

    def node() -> TernaryMonomial:
        nonlocal pos
        if pos >= len(s):
            raise MalformedInputError(f"unexpected end of input at position {pos}")
        ch = s[pos]
        if ch == "[":
            pos += 1
            children = []
            while pos < len(s) and s[pos] != "]":
                if s[pos] == ",":
                    pos += 1
                    continue
                children.append(node())
            if pos >= len(s):
                raise MalformedInputError(f"unbalanced brackets at position {pos}")
            pos += 1  # consume ']'
            if len(children) != 3:
                raise MalformedInputError(
                    f"node arity {len(children)} at position {pos}; nodes are ternary"
                )
            return tuple(children)
        if ch.isalpha():
            pos += 1
            return ALPHABET.index(ch)
        raise MalformedInputError(f"unexpected character {ch!r} at position {pos}")

    t = node()
    if pos != len(s):
        raise MalformedInputError(f"trailing input at position {pos}")
    check_multilinear(t)
    return t


# ---------------------------------------------------------------------------
# association types and ordered bases


def _shapes(n: int) -> list[tuple]:
    """Association-type templates for arity n, leaves numbered 0..n-1
    left to right, in the standard display order."""
    if n == 3:
        return [(0, 1, 2)]
    if n == 5:
        return [((0, 1, 2), 3, 4), (0, 1, (2, 3, 4))]
    if n == 7:
        return [
            (((0, 1, 2), 3, 4), 5, 6),
            ((0, 1, (2, 3, 4)), 5, 6),
            (0, 1, ((2, 3, 4), 5, 6)),
            (0, 1, (2, 3, (4, 5, 6))),
            ((0, 1, 2), (3, 4, 5), 6),
            ((0, 1, 2), 3, (4, 5, 6)),
        ]
    raise MalformedInputError(f"unsupported arity {n}; supported: 3, 5, 7")


def shape_of(t: TernaryMonomial) -> tuple:
    """The association type of a monomial, leaves renumbered 0..n-1."""
    counter = [0]

    def walk(u):
        if isinstance(u, int):
            counter[0] += 1
            return counter[0] - 1
        return tuple(walk(c) for c in u)

    return walk(t)


class SkewBasis:
    """Ordered basis of SkewTS(n): association types in display order,
    lex on the flattened letter tuple within each type."""

    def __init__(self, n: int):
        self.arity = n
        self.shapes = _shapes(n)
        self.monomials: list[TernaryMonomial] = []
        self.type_offsets: list[int] = []
        self.type_sizes: list[int] = []
        for shape in self.shapes:
            self.type_offsets.append(len(self.monomials))
            block = [
                relabel(shape, sigma)
                for sigma in permutations(range(n))
                if is_canonical(relabel(shape, sigma))
            ]
            block.sort(key=leaves)
            self.monomials.extend(block)
            self.type_sizes.append(len(block))
        self.index = {m: i for i, m in enumerate(self.monomials)}

    def __len__(self) -> int:
        return len(self.monomials)

    def __getitem__(self, i: int) -> TernaryMonomial:
        return self.monomials[i]

    def type_of(self, i: int) -> int:
        """Association-type number (0-based) of basis monomial i."""
        for t in range(len(self.type_offsets) - 1, -1, -1):
            if i >= self.type_offsets[t]:
                return t
        raise IndexError(i)


@lru_cache(maxsize=None)
def skew_basis(n: int) -> SkewBasis:
    return SkewBasis(n)


# ---------------------------------------------------------------------------
# elements and the symmetric group action


class SkewElement:
    """Sparse linear combination over the ordered basis of SkewTS(n)."""

    __slots__ = ("arity", "coeffs")

    def __init__(self, arity_: int, coeffs: dict[int, object] | None = None):
        self.arity = arity_
        self.coeffs = dict(coeffs) if coeffs else {}

    @classmethod
    def from_terms(cls, arity_: int, terms) -> "SkewElement":
        """Aggregate (tree, coeff) pairs, straightening each tree."""
        basis = skew_basis(arity_)
        coeffs: dict[int, object] = {}
        for t, c in terms:
            sign, canon = straighten(t)
            i = basis.index[canon]
            coeffs[i] = coeffs.get(i, 0) + sign * c
        return cls(arity_, {i: c for i, c in coeffs.items() if c != 0})

    def term_count(self) -> int:
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def to_vector(self) -> list:
        v = [0] * len(skew_basis(self.arity))
        for i, c in self.coeffs.items():
            v[i] = c
        return v

    def terms(self) -> list[tuple[TernaryMonomial, object]]:
        basis = skew_basis(self.arity)
        return [(basis[i], c) for i, c in sorted(self.coeffs.items())]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SkewElement)
            and self.arity == other.arity
            and self.coeffs == other.coeffs
        )

    def __neg__(self) -> "SkewElement":
        return SkewElement(self.arity, {i: -c for i, c in self.coeffs.items()})

    def __str__(self) -> str:
        basis = skew_basis(self.arity)
        parts = []
        for i, c in sorted(self.coeffs.items()):
            parts.append(f"{'+' if c > 0 else '-'} {abs(c)} {format_ternary(basis[i])}")
        return " ".join(parts) if parts else "0"


def act(sigma: Word, x: SkewElement) -> SkewElement:
    """Relabel variables by sigma and restraighten; linear in x."""
    if len(sigma) != x.arity:
        raise MalformedInputError("arity mismatch between permutation and element")
    basis = skew_basis(x.arity)
    return SkewElement.from_terms(
        x.arity, ((relabel(basis[i], sigma), c) for i, c in x.coeffs.items())
    )


# ---------------------------------------------------------------------------
# operadic consequences


def substitute(rel: SkewElement, position: int, inner: tuple[int, ...]) -> SkewElement:
    """Replace the variable at argument `position` by the triple of `inner` letters."""
    node = tuple(inner)
    basis = skew_basis(rel.arity)

    def sub(t):
        if isinstance(t, int):
            return node if t == position else t
        return tuple(sub(c) for c in t)

    return SkewElement.from_terms(
        rel.arity + 2, ((sub(basis[i]), c) for i, c in rel.coeffs.items())
    )


def embed(rel: SkewElement, position: int, extra: tuple[int, int]) -> SkewElement:
    """Wrap every term m of rel in a new outer node with m at `position`
    and the two extra letters filling the remaining argument slots."""
    basis = skew_basis(rel.arity)
    f, g = extra

    def wrap(m):
        slots = [f, g]
        slots.insert(position, m)
        return tuple(slots)

    return SkewElement.from_terms(
        rel.arity + 2, ((wrap(basis[i]), c) for i, c in rel.coeffs.items())
    )


def consequences(rel: SkewElement) -> list[SkewElement]:
    """The eight operadic consequences of an arity-5 relation in arity 7:
    the five inner substitutions x -> [x,f,g] followed by the three outer
    embeddings, each straightened to canonical form."""
    if rel.arity != 5:
        raise MalformedInputError("consequences are generated from arity-5 relations")
    n = rel.arity
    f, g = n, n + 1
    out = [substitute(rel, pos, (pos, f, g)) for pos in range(n)]
    out.extend(embed(rel, pos, (f, g)) for pos in range(3))
    return out
