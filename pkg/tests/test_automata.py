import pytest

from idfa import ops, witnesses as W
from idfa.automata import (
    AutomatonError,
    Dfa,
    FiniteLanguage,
    InfiniteLanguageError,
    Nfa,
    accepts,
    canonical,
    complete,
    complete_state_count,
    determinize,
    enumerate_language,
    is_acyclic,
    is_isomorphic,
    minimize,
    sort_symbols,
    topological_order,
    trim,
    validate,
    word,
)
from idfa.oracle import minimal_dfa_from_words


def chain(*symbols, finals=None):
    n = len(symbols) + 1
    finals = [n - 1] if finals is None else finals
    return Dfa.build(n, set(symbols), finals, {(i, s): i + 1 for i, s in enumerate(symbols)})


def test_symbol_order_puts_atomic_letters_before_indexed_ones():
    assert sort_symbols(["a_2_1", "c", "a_1_2", "b", "a_10", "a_2"]) == (
        "b", "c", "a_1_2", "a_2", "a_2_1", "a_10",
    )


def test_word_parsing():
    assert word("ab") == ("a", "b")
    assert word("a_1_1 b") == ("a_1_1", "b")
    assert word("") == ()
    assert word(["a_2", "b"]) == ("a_2", "b")


def test_validate_accepts_smallest_dfa():
    assert validate(Dfa.build(1, [], [0], {})) == []


def test_validate_reports_target_out_of_range():
    d = Dfa(3, ("b",), frozenset({2}), ((0, "b", 5),))
    assert validate(d) == ["target out of range"]


def test_validate_reports_nondeterminism():
    d = Dfa(3, ("b",), frozenset({2}), ((0, "b", 1), (0, "b", 2)))
    assert validate(d) == ["nondeterministic on (0,b)"]


def test_trim_removes_unreachable_state():
    d = Dfa.build(3, ["b"], [1, 2], {(0, "b"): 1})
    assert is_isomorphic(trim(d), chain("b"))


def test_trim_removes_sink_of_complete_dfa():
    assert is_isomorphic(trim(complete(chain("b"))), chain("b"))


def test_trim_is_idempotent_on_trim_dfa():
    a, _ = W.union_witness(3, 3)
    assert is_isomorphic(trim(a), a)


def test_trim_of_empty_language_is_single_state():
    d = Dfa.build(2, ["b"], [], {(0, "b"): 1})
    t = trim(d)
    assert (t.n, t.finals, t.transitions) == (1, frozenset(), ())


def test_is_acyclic():
    assert is_acyclic(chain("a", "b"))
    assert not is_acyclic(Dfa.build(2, ["a"], [1], {(0, "a"): 1, (1, "a"): 1}))
    assert not is_acyclic(ops.complement(chain("b")))


def test_accepts():
    b = chain("b")
    assert accepts(b, "b")
    assert not accepts(b, "bb")
    assert not accepts(b, "")
    a, _ = W.union_witness(3, 3)
    assert accepts(a, ["a_2_1"])


def test_accepts_rejects_unknown_symbol():
    with pytest.raises(AutomatonError):
        accepts(chain("b"), "z")


def test_enumerate_language():
    assert set(enumerate_language(chain("b")).words) == {("b",)}
    a, _ = W.concat_witness_case1(2, 2)
    assert set(enumerate_language(a).words) == {(), ("a",), ("b",)}
    assert set(enumerate_language(Dfa.empty(["b"])).words) == set()


def test_enumerate_language_refuses_cycles():
    with pytest.raises(InfiniteLanguageError, match="infinite language"):
        enumerate_language(Dfa.build(1, ["a"], [0], {(0, "a"): 0}))


def test_determinize_deterministic_nfa_is_isomorphic():
    d = chain("a", "b")
    nfa = Nfa(d.n, d.alphabet, frozenset({0}), d.finals, {(p, a): frozenset({q}) for p, a, q in d.transitions})
    assert is_isomorphic(determinize(nfa), d)


def test_determinize_reverse_matches_mirror_words():
    d = minimal_dfa_from_words(FiniteLanguage.of(["ab", "bb"]))
    rev = determinize(ops.reverse_nfa(d))
    assert set(enumerate_language(rev).words) == {("b", "a"), ("b", "b")}
    assert is_isomorphic(minimize(rev), minimal_dfa_from_words(FiniteLanguage.of(["ba", "bb"])))


def test_determinize_two_final_initials_gives_final_initial():
    nfa = Nfa(2, ("a",), frozenset({0, 1}), frozenset({0, 1}), {})
    assert 0 in determinize(nfa).finals


def test_minimize_is_idempotent_and_minimal():
    a, _ = W.union_witness(3, 4)
    assert is_isomorphic(minimize(a), a)
    assert is_isomorphic(minimize(minimize(a)), minimize(a))


def test_minimize_union_witness_product_2_2():
    a, b = W.union_witness(2, 2)
    m = minimize(ops.union(a, b))
    assert (m.n, m.num_transitions) == (2, 2)
    assert is_isomorphic(m, minimal_dfa_from_words(FiniteLanguage.of(["b", "c"])))


def test_minimize_merges_equivalent_states():
    # {ab, bb}: the states after a and after b are equivalent
    d = Dfa.build(4, "ab", [3], {(0, "a"): 1, (0, "b"): 2, (1, "b"): 3, (2, "b"): 3})
    assert minimize(d).n == 3


def test_minimize_handles_cycles():
    d = Dfa.build(3, "a", [0, 2], {(0, "a"): 1, (1, "a"): 2, (2, "a"): 1})
    assert minimize(d).n == 2


def test_isomorphism():
    d = chain("a", "b")
    shuffled = Dfa.build(3, "ab", [1], {(0, "a"): 2, (2, "b"): 1})
    assert is_isomorphic(d, d)
    assert is_isomorphic(d, shuffled)
    assert not is_isomorphic(chain("b"), chain("c"))


def test_canonical_numbering_is_bfs_in_symbol_order():
    d = Dfa.build(3, "ab", [1, 2], {(0, "b"): 1, (0, "a"): 2})
    c = canonical(d)
    assert c.delta == {(0, "a"): 1, (0, "b"): 2}


def test_complete_state_count():
    assert complete_state_count(chain("b")) == 3
    assert complete_state_count(Dfa.empty(["b"])) == 1
    assert complete_state_count(ops.complement(chain("b"))) == 3


def test_topological_order_breaks_ties_by_id():
    d = Dfa.build(4, "ab", [3], {(0, "a"): 2, (0, "b"): 1, (1, "a"): 3, (2, "a"): 3})
    assert topological_order(d) == [0, 1, 2, 3]
