"""Block encoding, factor-avoidance DFA, and the coupled system."""

import json
from pathlib import Path

import pytest

from qpart.automata import (
    ALPHABET,
    FORBIDDEN_WORDS,
    PI,
    Dfa,
    NotEncodable,
    build_avoidance_dfa,
    canonical_relabel,
    decode,
    derive_transfer_system,
    encode,
    hopcroft_minimize,
    language_series,
    letter_weight,
    solve_language_series,
    word_contains_factor,
)
from qpart.colored import COND_D123, COND_D1234, check_condition, enumerate_2colored, gen_fun, iter_all
from qpart.holonomic import poly_times_biseries
from qpart.laurent import LaurentPoly
from qpart.series import BiSeries

GOLDEN = Path(__file__).resolve().parent.parent / "golden"


def test_alphabet_data():
    assert len(ALPHABET) == 13 and len(PI) == 13
    assert len(FORBIDDEN_WORDS) == 48
    assert all(len(w) == 2 for w in FORBIDDEN_WORDS)
    assert all(m <= 3 for img in PI.values() for m, _ in img)


def test_decode_example():
    assert decode("maei") == ((11, "-"), (10, "+"), (8, "-"), (3, "+"), (3, "-"))


def test_decode_all_a():
    assert decode("aaaa") == ()


def test_encode_example():
    assert encode(((4, "+"), (2, "+"))) == "db"


def test_encode_not_encodable():
    with pytest.raises(NotEncodable):
        encode(((2, "+"), (2, "+")))


def test_round_trip_and_language_equivalence():
    # decode(encode(lam)) = lam on encodable partitions (so decode is
    # injective there); membership in the D1-D3 class is equivalent to
    # avoiding the forbidden factors; exhaustive through size 18
    seen = set()
    for lam in iter_all(18):
        try:
            w = encode(lam)
        except NotEncodable:
            assert not check_condition(lam, COND_D123)
            continue
        assert decode(w) == lam
        assert w not in seen or lam == ()
        seen.add(w)
        assert check_condition(lam, COND_D123) == (not word_contains_factor(w))


def test_minimal_dfa_matches_golden():
    dfa = build_avoidance_dfa()
    golden = Dfa.from_json(json.loads((GOLDEN / "dfa_canonical.json").read_text()))
    assert dfa.n_states == 6
    assert len(dfa.accepts) == 1
    assert dfa == golden


def test_minimization_is_fixed_point():
    dfa = build_avoidance_dfa()
    assert hopcroft_minimize(dfa) == dfa
    assert canonical_relabel(dfa) == dfa


def test_small_word_sets():
    assert build_avoidance_dfa(("b",)).n_states == 2
    assert build_avoidance_dfa(("fb",)).n_states == 3


def test_dfa_run_agrees_with_factor_search():
    dfa = build_avoidance_dfa()
    for word in ("", "abc", "fb", "afba", "ffff", "maei", "md", "hi", "ih", "jj", "aj"):
        assert dfa.accepts_word(word) == word_contains_factor(word)


def test_transfer_matrix_matches_golden():
    system = derive_transfer_system(build_avoidance_dfa())
    golden = json.loads((GOLDEN / "transfer_matrix.json").read_text())
    assert list(system.states) == golden["states"]
    assert [[e.to_json() for e in row] for row in system.matrix] == golden["matrix"]


def test_single_state_weight_sum():
    # a one-state all-accepting-nothing DFA collects the total letter weight;
    # frozen from the letter-weight oracle (sum over the 13 block images)
    delta = (tuple(0 for _ in ALPHABET),)
    dfa = Dfa(1, ALPHABET, delta, 0, frozenset())
    system = derive_transfer_system(dfa)
    x = LaurentPoly.variable(("x", "q"), "x")
    q = LaurentPoly.variable(("x", "q"), "q")
    expected = (
        1 + 2 * x * q + 2 * x * q ** 2 + 2 * x * q ** 3
        + 2 * x ** 2 * q ** 3 + 3 * x ** 2 * q ** 4 + x ** 2 * q ** 6
    )
    assert system.matrix[0][0] == expected
    total = LaurentPoly.zero(("x", "q"))
    for letter in ALPHABET:
        ell, sz = letter_weight(letter)
        total = total + LaurentPoly.monomial(("x", "q"), (ell, sz))
    assert total == expected


def test_accepting_start_gives_empty_system():
    delta = ((0,) * len(ALPHABET),)
    dfa = Dfa(1, ALPHABET, delta, 0, frozenset({0}))
    system = derive_transfer_system(dfa)
    assert system.states == ()
    assert system.matrix == ()


def test_language_series_counts_partition_classes():
    n = 16
    system = derive_transfer_system(build_avoidance_dfa())
    sols = solve_language_series(system, n)
    assert sols[0] == gen_fun(enumerate_2colored(n - 1, COND_D123), n)
    assert sols[1] == gen_fun(enumerate_2colored(n - 1, COND_D1234), n)
    assert language_series(system, 0, 1) == BiSeries.one(1)


def test_language_series_nonnegative_and_consistent():
    n = 15
    system = derive_transfer_system(build_avoidance_dfa())
    sols = solve_language_series(system, n)
    for s in sols.values():
        assert all(c >= 0 for sl in s.slices.values() for c in sl.coeffs)
    # substituting the solutions back into the system holds mod q^n
    for i, u in enumerate(system.states):
        rhs = BiSeries.zero(n)
        for j, v in enumerate(system.states):
            entry = system.matrix[i][j]
            if not entry.is_zero():
                rhs = rhs + poly_times_biseries(entry, sols[v].apply_xshift(system.shift))
        assert rhs == sols[u]


def test_dfa_json_and_dot():
    dfa = build_avoidance_dfa()
    assert Dfa.from_json(dfa.to_json()) == dfa
    dot = dfa.to_dot()
    assert dot.count("doublecircle") == 1 and "digraph" in dot
