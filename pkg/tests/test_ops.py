import pytest

from idfa import ops, witnesses as W
from idfa.automata import (
    Dfa,
    FiniteLanguage,
    InfiniteLanguageError,
    enumerate_language,
    is_acyclic,
    is_isomorphic,
    minimize,
    word,
)
from idfa.oracle import (
    agrees_up_to,
    bounded_words,
    complement_stepper,
    concat_words,
    minimal_dfa_from_words,
    reverse_words,
    star_stepper,
)


def dfa_of(*words, alphabet=()):
    return minimal_dfa_from_words(FiniteLanguage.of(words, alphabet))


def words_of(d):
    return set(enumerate_language(d).words)


def test_union_witness_sizes():
    for (m, n), expected in {(2, 2): (2, 2), (2, 3): (4, 5)}.items():
        r = minimize(ops.union(*W.union_witness(m, n)))
        assert (r.n, r.num_transitions) == expected


def test_union_with_itself():
    a, _ = W.union_witness(3, 4)
    assert is_isomorphic(minimize(ops.union(a, a)), minimize(a))


def test_intersection_witness_3_3():
    a, b = W.intersection_witness(3, 3)
    r = minimize(ops.intersection(a, b))
    assert words_of(r) == {word("a_1_1 a_1_1"), word("a_2_2")}
    assert r.n == 3


def test_intersection_of_disjoint_languages_is_empty():
    r = minimize(ops.intersection(dfa_of("b"), dfa_of("c")))
    assert (r.n, r.finals, r.transitions) == (1, frozenset(), ())


def test_intersection_with_itself():
    a, _ = W.intersection_witness(4, 3)
    assert is_isomorphic(minimize(ops.intersection(a, a)), minimize(a))


def test_complement_of_b_cubed():
    d = dfa_of("bbb")
    r = minimize(ops.complement(d))
    assert (r.n, r.num_transitions) == (5, 5)
    assert agrees_up_to(r, complement_stepper(frozenset({word("bbb")})), ["b"], 8) is None


def test_complement_of_empty_language_accepts_everything():
    r = minimize(ops.complement(Dfa.empty(["b"])))
    assert (r.n, r.finals, r.transitions) == (1, frozenset({0}), ((0, "b", 0),))


def test_complement_is_an_involution():
    a, _ = W.union_witness(3, 3)
    twice = ops.complement(ops.complement(a))
    depth = a.n + 2
    assert bounded_words(twice, depth).words == bounded_words(a, depth).words


def test_complement_result_is_complete_and_labelled():
    r = ops.complement(dfa_of("b"))
    assert r.is_complete()
    assert ops.OMEGA in r.labels


def test_concat_with_epsilon_is_identity():
    b, _ = W.union_witness(3, 3)
    eps = Dfa.build(1, b.alphabet, [0], {})
    assert is_isomorphic(minimize(ops.concat(eps, b)), minimize(b))


def test_concat_construction_size_for_case1_3_5():
    a, b = W.concat_witness_case1(3, 5)
    assert ops.concat(a, b).n == 18


def test_concat_case1_3_3():
    a, b = W.concat_witness_case1(3, 3)
    r = minimize(ops.concat(a, b))
    assert (r.n, r.num_transitions) == (10, 16)
    expected = concat_words(enumerate_language(a).words, enumerate_language(b).words)
    assert words_of(r) == expected


def test_star_of_epsilon_and_empty():
    for d in (Dfa.build(1, ["b"], [0], {}), Dfa.empty(["b"])):
        assert words_of(minimize(ops.star(d))) == {()}


def test_star_of_single_letter():
    r = minimize(ops.star(dfa_of("b")))
    assert (r.n, r.num_transitions) == (1, 1)
    assert agrees_up_to(r, star_stepper(frozenset({("b",)})), ["b"], 5) is None


def test_star_of_single_final_state_language():
    r = minimize(ops.star(dfa_of("bbb")))
    assert r.n == 3
    assert agrees_up_to(r, star_stepper(frozenset({word("bbb")})), ["b"], 12) is None


def test_star_witness_4():
    assert minimize(ops.star(W.star_witness(4))).n == 5


def test_reversal_of_palindrome_and_word():
    assert words_of(ops.reversal(dfa_of("aba"))) == {word("aba")}
    assert words_of(ops.reversal(dfa_of("ab"))) == {word("ba")}


def test_reversal_witness_4():
    r = minimize(ops.reversal(W.reversal_witness(4)))
    assert (r.n, r.num_transitions) == (6, 9)


def test_reversal_witness_6_mirror_set():
    a = W.reversal_witness(6)
    assert words_of(ops.reversal(a)) == reverse_words(enumerate_language(a).words)


def test_finite_operations_refuse_cycles():
    loop = Dfa.build(1, ["b"], [0], {(0, "b"): 0})
    b = dfa_of("b")
    for name, args in [
        ("union", (loop, b)),
        ("intersection", (b, loop)),
        ("concat", (loop, b)),
        ("star", (loop,)),
        ("reversal", (loop,)),
    ]:
        with pytest.raises(InfiniteLanguageError):
            ops.apply(name, *args)


def test_complement_output_is_cyclic():
    assert not is_acyclic(ops.apply("complement", dfa_of("b"), minimal=True))


def test_binary_ops_unite_alphabets():
    r = ops.union(dfa_of("b"), dfa_of("c"))
    assert r.alphabet == ("b", "c")
