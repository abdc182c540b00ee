"""Zinbiel normal forms, word ranking, and the arity-5 golden formulas."""

from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from tortkara import words
from tortkara.words import (
    MalformedInputError,
    ZinbielElement,
    all_words,
    association_types,
    format_binary,
    format_word,
    lex_rank,
    lex_unrank,
    normal_form_table,
    parse_binary,
    znf,
    znf_element,
)


def _pos(w, x):
    return w.index(x)


# closed formulas for the 14 arity-5 association types with the identity
# permutation of a..e: each case is (monomial, predicate on the word).
# Cases 1-9 sum over permutations of {b,c,d,e} prefixed by a; cases 10-12
# over permutations of {c,d,e} prefixed by ab; the last two are explicit.
CLOSED_FORMULAS = [
    ("(((ab)c)d)e", lambda w: True),
    ("((a(bc))d)e", lambda w: _pos(w, 1) < _pos(w, 2)),
    ("((ab)(cd))e", lambda w: _pos(w, 2) < _pos(w, 3)),
    ("(a((bc)d))e", lambda w: _pos(w, 1) < _pos(w, 2) and _pos(w, 1) < _pos(w, 3)),
    ("(a(b(cd)))e", lambda w: _pos(w, 1) < _pos(w, 2) < _pos(w, 3)),
    ("((ab)c)(de)", lambda w: _pos(w, 3) < _pos(w, 4)),
    ("(a(bc))(de)", lambda w: _pos(w, 1) < _pos(w, 2) and _pos(w, 3) < _pos(w, 4)),
    ("(ab)((cd)e)", lambda w: _pos(w, 2) < _pos(w, 3) and _pos(w, 2) < _pos(w, 4)),
    ("(ab)(c(de))", lambda w: _pos(w, 2) < _pos(w, 3) < _pos(w, 4)),
    ("a(((bc)d)e)", lambda w: True),
    ("a((b(cd))e)", lambda w: _pos(w, 2) < _pos(w, 3)),
    ("a((bc)(de))", lambda w: _pos(w, 3) < _pos(w, 4)),
]


@pytest.mark.parametrize("text,pred", CLOSED_FORMULAS, ids=[t for t, _ in CLOSED_FORMULAS])
def test_closed_formulas_first_twelve(text, pred):
    mono = parse_binary(text)
    if text[0] == "a" and text[1] == "(":
        expected = [(0, 1) + p for p in permutations((2, 3, 4)) if pred((0, 1) + p)]
    else:
        expected = [(0,) + p for p in permutations((1, 2, 3, 4)) if pred((0,) + p)]
    assert sorted(znf(mono)) == sorted(expected)


def test_closed_formula_corrected_line():
    # a(b((cd)e)) = a(b(c(de))) + a(b(c(ed)))  (the printed source has a
    # typographical repeat of the first term)
    assert sorted(znf(parse_binary("a(b((cd)e))"))) == [(0, 1, 2, 3, 4), (0, 1, 2, 4, 3)]


def test_closed_formula_normal_form_case():
    assert znf(parse_binary("a(b(c(de)))")) == [(0, 1, 2, 3, 4)]


def test_znf_basic_examples():
    assert znf(0) == [(0,)]
    assert sorted(znf(parse_binary("(ab)c"))) == [(0, 1, 2), (0, 2, 1)]
    assert sorted(znf(parse_binary("(ab)(cd)"))) == [
        (0, 1, 2, 3),
        (0, 2, 1, 3),
        (0, 2, 3, 1),
    ]


def test_association_types_arity5():
    types = association_types(5)
    assert len(types) == 14
    assert [format_binary(t) for t in types[:3]] == [
        "(((ab)c)d)e",
        "((a(bc))d)e",
        "((ab)(cd))e",
    ]


def test_normal_form_table():
    table = dict((format_binary(t), el) for t, el in normal_form_table(5))
    assert table["(a(bc))(de)"].terms().__len__() == 6
    assert table["a(b(c(de)))"].terms() == [((0, 1, 2, 3, 4), 1)]
    # every normal form has all-+1 coefficients
    for el in table.values():
        assert all(c == 1 for _, c in el.terms())


def test_lex_rank_examples():
    assert lex_rank((0, 1, 2, 3, 4)) == 1
    assert lex_rank((0, 1, 2, 4, 3)) == 2
    assert lex_rank((4, 3, 2, 1, 0)) == 120


@given(st.integers(1, 6).flatmap(lambda n: st.permutations(range(n))))
def test_lex_rank_unrank_roundtrip(perm):
    w = tuple(perm)
    assert lex_unrank(len(w), lex_rank(w)) == w


def test_all_words_is_lex_sorted():
    ws = all_words(4)
    assert ws == sorted(ws)
    assert [lex_rank(w) for w in ws] == list(range(1, 25))


@pytest.mark.parametrize("text", ["(((ab)c)d)e", "(ab)(cd)", "a(b((cd)e))", "ab"])
def test_parse_format_roundtrip(text):
    mono = parse_binary(text)
    assert parse_binary(format_binary(mono)) == mono


def test_parse_rejects_malformed():
    for bad in ["(ab", "abc", "(aa)b", "()", "(ab)cd"]:
        with pytest.raises(MalformedInputError):
            parse_binary(bad)


def test_znf_rejects_repeated_variable():
    with pytest.raises(MalformedInputError):
        znf_element(((0, 0), 1))


@given(st.integers(2, 5))
def test_znf_left_comb_term_count(n):
    # the left comb (((ab)c)d)... normalizes to all (n-1)! words starting
    # with a, each with coefficient +1
    from math import factorial

    comb = 0
    for i in range(1, n):
        comb = (comb, i)
    el = znf_element(comb)
    terms = el.terms()
    assert len(terms) == factorial(n - 1)
    assert all(c == 1 and w[0] == 0 for w, c in terms)


def test_word_to_tree_right_normed():
    w = (2, 0, 1, 3)
    assert znf(words.word_to_tree(w)) == [w]


def test_zinbiel_element_str():
    el = znf_element(parse_binary("(ab)c"))
    assert str(el) == "+ a(bc) + a(cb)"
