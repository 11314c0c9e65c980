from idfa import ops, witnesses as W
from idfa.automata import Dfa, FiniteLanguage, enumerate_language, is_isomorphic, minimize, word
from idfa.oracle import (
    agrees_up_to,
    all_words,
    bounded_words,
    complement_stepper,
    concat_words,
    minimal_dfa_from_words,
    quotient,
    star_stepper,
    union_words,
    words_stepper,
)


def lang(*words):
    return FiniteLanguage.of(words)


def test_quotient():
    ws = frozenset({word("ab"), word("ac"), word("b")})
    assert quotient(ws, "a") == {("b",), ("c",)}
    assert quotient(ws, "c") == frozenset()


def test_minimal_dfa_of_two_letters():
    d = minimal_dfa_from_words(lang("b", "c"))
    assert (d.n, d.num_transitions) == (2, 2)


def test_minimal_dfa_of_empty_language():
    d = minimal_dfa_from_words(FiniteLanguage.of([], ["b"]))
    assert (d.n, d.num_transitions, d.finals) == (1, 0, frozenset())


def test_union_witness_2_3_language_and_size():
    a, b = W.union_witness(2, 3)
    words = union_words(enumerate_language(a).words, enumerate_language(b).words)
    assert words == {word("b"), word("a_1_1"), word("cc"), word("a_1_1 c")}
    d = minimal_dfa_from_words(FiniteLanguage(words, a.alphabet))
    assert (d.n, d.num_transitions) == (4, 5)


def test_bounded_words_of_complement():
    comp = ops.complement(Dfa.build(2, ["b"], [1], {(0, "b"): 1}))
    assert set(bounded_words(comp, 3).words) == {(), word("bb"), word("bbb")}


def test_bounded_words_equals_enumeration_past_depth():
    a, _ = W.concat_witness_case1(4, 3)
    assert bounded_words(a, a.n - 1).words == enumerate_language(a).words


def test_bounded_words_of_full_loop():
    d = Dfa.build(1, "ab", [0], {(0, "a"): 0, (0, "b"): 0})
    assert len(bounded_words(d, 2)) == 7


def test_all_words_counts():
    assert len(list(all_words("ab", 3))) == 1 + 2 + 4 + 8


def test_concat_words():
    assert concat_words(frozenset({(), ("a",)}), frozenset({("b",)})) == {("b",), ("a", "b")}


def test_agrees_up_to_detects_mismatch():
    b_star = Dfa.build(1, ["b"], [0], {(0, "b"): 0})
    assert agrees_up_to(b_star, star_stepper(frozenset({("b",)})), ["b"], 8) is None
    bb_star = star_stepper(frozenset({("b", "b")}))
    assert agrees_up_to(b_star, bb_star, ["b"], 8) == ("b",)


def test_agrees_up_to_complement_and_words():
    d = Dfa.build(2, ["b"], [1], {(0, "b"): 1})
    ws = frozenset({("b",)})
    assert agrees_up_to(ops.complement(d), complement_stepper(ws), ["b"], 10) is None
    assert agrees_up_to(d, words_stepper(ws), ["b"], 10) is None
    assert agrees_up_to(d, complement_stepper(ws), ["b"], 10) == ()


def test_oracle_agrees_with_minimize_on_witnesses():
    for a in W.union_witness(3, 4) + W.concat_witness_case2(2, 5):
        assert is_isomorphic(minimal_dfa_from_words(enumerate_language(a)), minimize(a))
