import random
from itertools import combinations

import pytest
from hypothesis import given, settings

from oracles import (
    concat_table,
    member,
    membership_table,
    random_dfa,
    residual_count,
    reverse_table,
    star_table,
    words,
)
from sclab.automata import Alphabet, effective_alphabet, minimize, quotient_complexity, restrict, subset_construction
from sclab.errors import BudgetExceeded
from sclab.figures import epsilon_only, sigma_star
from sclab.ops import (
    BoolOp,
    ProductStateLabel,
    boolean_op,
    concat,
    direct_product,
    product_nfa,
    product_subset_census,
    reverse,
    split_subset,
    star,
)
from sclab.witnesses import witness, witness_pair
from strategies import dfas


def subsets_of(states):
    states = list(states)
    return [frozenset(c) for k in range(len(states) + 1) for c in combinations(states, k)]


# -- direct product / boolean operations --------------------------------------


def test_ends_union_product(ends_b, ends_c, ends_b_full, ends_c_full):
    prod = direct_product(ends_b, ends_c, BoolOp.UNION)
    full = direct_product(ends_b_full, ends_c_full, BoolOp.UNION)
    assert prod.dfa == full.dfa
    assert minimize(prod.dfa).n == 6
    assert boolean_op(ends_b, ends_c, BoolOp.UNION).n == 6


def test_self_difference_is_empty(ends_b):
    d = boolean_op(ends_b, ends_b, BoolOp.DIFFERENCE)
    assert d.n == 1 and not d.finals


def test_union_witness_product_reaches_every_pair():
    left, right = witness_pair("union", 3, 3)
    prod = direct_product(left, right, BoolOp.UNION)
    expected = {ProductStateLabel(p, q) for p in (0, 1, 2, None) for q in (0, 1, 2, None)}
    assert set(prod.labels) == expected
    assert prod.dfa.n == 16


def test_no_sink_label_when_already_complete():
    left, right = witness_pair("intersection", 3, 3)
    prod = direct_product(left, right, BoolOp.INTERSECTION)
    assert all(l.left is not None and l.right is not None for l in prod.labels)


def test_boolean_op_examples():
    assert boolean_op(*witness_pair("union", 3, 3), BoolOp.UNION).n == 16
    assert boolean_op(*witness_pair("intersection", 3, 3), BoolOp.INTERSECTION).n == 9
    assert boolean_op(*witness_pair("difference", 4, 3), BoolOp.DIFFERENCE).n == 16


def test_effective_alphabets_of_witness_results():
    diff = boolean_op(*witness_pair("difference", 4, 4), BoolOp.DIFFERENCE)
    inter = boolean_op(*witness_pair("intersection", 4, 4), BoolOp.INTERSECTION)
    assert diff.alphabet.names == ("a", "b", "c")
    assert inter.alphabet.names == ("a", "b")


def test_difference_and_intersection_drop_unreachable_empty_state():
    # before restricting to the result's own alphabet, one extra empty state survives
    for op, kind in [("difference", BoolOp.DIFFERENCE), ("intersection", BoolOp.INTERSECTION)]:
        left, right = witness_pair("union", 3, 3)
        prod = direct_product(left, right, kind).dfa
        assert minimize(prod).n == boolean_op(left, right, kind).n + 1


def _walk(prod, label, word):
    index = {l: i for i, l in enumerate(prod.labels)}
    q = index[label]
    q = prod.dfa.run(word, start=q)
    return prod.labels[q]


@pytest.mark.parametrize("m,n", [(3, 3), (4, 5), (5, 3)])
def test_union_reaches_empty_rows(m, n):
    left, right = witness_pair("union", m, n)
    prod = direct_product(left, right, BoolOp.UNION)
    start = ProductStateLabel(0, 0)
    assert _walk(prod, start, "d") == ProductStateLabel(None, 0)
    assert _walk(prod, start, "c") == ProductStateLabel(0, None)
    for q in range(n):
        assert _walk(prod, ProductStateLabel(None, 0), "b" * q) == ProductStateLabel(None, q)
    for p in range(m):
        assert _walk(prod, ProductStateLabel(0, None), "a" * p) == ProductStateLabel(p, None)
    assert _walk(prod, ProductStateLabel(None, n - 1), "c") == ProductStateLabel(None, None)


@pytest.mark.parametrize("m", range(3, 7))
@pytest.mark.parametrize("n", range(3, 7))
def test_restricted_core_reachable_and_distinguishable(m, n):
    """All mn pairs over {a,b} are reachable and pairwise distinguishable, for every operation."""
    ab = Alphabet.of("ab")
    left, right = witness_pair("union", m, n)
    left, right = restrict(left, ab), restrict(right, ab)
    for op in BoolOp:
        prod = direct_product(left, right, op).dfa
        assert prod.n == m * n
        assert minimize(prod).n == m * n


@settings(max_examples=30, deadline=None)
@given(dfas(max_n=4), dfas(max_n=4))
def test_kappa_commutes(d1, d2):
    for op in (BoolOp.UNION, BoolOp.SYMDIFF, BoolOp.INTERSECTION):
        assert boolean_op(d1, d2, op).n == boolean_op(d2, d1, op).n


# -- semantic oracle -------------------------------------------------------------


def check_against_membership(d1, d2, max_len=6):
    names = d1.alphabet.union(d2.alphabet).names
    t1 = membership_table(d1, names, max_len)
    t2 = membership_table(d2, names, max_len)
    for op in BoolOp:
        result = boolean_op(d1, d2, op)
        for w in t1:
            assert member(result, w) == op(t1[w], t2[w]), (op, w)
    cat = concat(d1, d2)
    expected = concat_table(t1, t2, max_len, names)
    for w, v in expected.items():
        assert member(cat, w) == v, ("concat", w)
    st = star(d1)
    for w, v in star_table(t1, max_len, names).items():
        assert member(st, w) == v, ("star", w)
    rev = reverse(d1)
    for w, v in reverse_table(t1).items():
        assert member(rev, w) == v, ("reverse", w)


@settings(max_examples=100, deadline=None)
@given(dfas(max_n=4), dfas(max_n=4))
def test_operations_match_set_semantics(d1, d2):
    check_against_membership(d1, d2, max_len=5)


def test_operations_match_set_semantics_seeded():
    rng = random.Random(7)
    for _ in range(10):
        check_against_membership(random_dfa(rng, max_n=4), random_dfa(rng, max_n=4))


# -- product ---------------------------------------------------------------------


def test_product_witness_3_3():
    assert concat(*witness_pair("product", 3, 3)).n == 28


def test_concat_with_epsilon(ends_b):
    for d in (ends_b, witness(4, "a,b,-,c")):
        assert concat(d, epsilon_only("a")).n == quotient_complexity(d)


def test_ends_concat_against_residual_oracle(ends_b, ends_c):
    def mem(w):
        return any(member(ends_b, w[:i]) and member(ends_c, w[i:]) for i in range(len(w) + 1))

    # residual signatures over prefixes and suffixes of length <= 4 (words to length 8)
    oracle = residual_count(mem, "abc", 4, 4)
    assert oracle == 5
    assert concat(ends_b, ends_c).n == oracle


def test_concat_budget():
    with pytest.raises(BudgetExceeded):
        concat(*witness_pair("product", 4, 4), budget=20)


def test_census_3_3():
    c = product_subset_census(*witness_pair("product", 3, 3))
    assert (c.nonfinal, c.final, c.right_only) == (16, 4, 8)
    assert c.total == 28 and c.k == 1


def test_census_4_3():
    c = product_subset_census(*witness_pair("product", 4, 3))
    assert c.total == 36 == 4 * 8 + 4


def test_census_many_finals_stays_below_bound():
    left, right = witness_pair("product", 3, 3)
    left = left.with_finals({1, 2})
    c = product_subset_census(left, right)
    assert c.k == 2
    assert c.total <= c.bound < 3 * 2**3 + 2**2
    assert c.total < 28


@pytest.mark.parametrize("m", [3, 4])
@pytest.mark.parametrize("n", [3, 4])
def test_every_subset_shape_is_reachable(m, n):
    left, right = witness_pair("product", m, n)
    _, subsets = subset_construction(product_nfa(left, right))
    reached = {split_subset(s, m) for s in subsets}
    Q = range(n)
    for p in range(m - 1):
        for S in subsets_of(Q):
            assert (frozenset({p}), S) in reached
    for S in subsets_of(range(1, n)):
        assert (frozenset({m - 1}), S | {0}) in reached
    for S in subsets_of(Q):
        assert (frozenset(), S) in reached
    assert len(reached) == m * 2**n + 2 ** (n - 1)


@pytest.mark.parametrize("m", [3, 4, 5])
@pytest.mark.parametrize("n", [3, 4])
def test_two_step_entry_to_first_left_state(m, n):
    """With 1 ∉ S, reaching {(m-2)'} ∪ S means {0', 1} ∪ S is reachable too."""
    left, right = witness_pair("product", m, n)
    _, subsets = subset_construction(product_nfa(left, right))
    reached = {split_subset(s, m) for s in subsets}
    for S in subsets_of([q for q in range(n) if q != 1]):
        if (frozenset({m - 2}), S) in reached:
            assert (frozenset({0}), S | {1}) in reached


def test_only_state_q_accepts_its_b_word():
    n = 3
    right = witness(n, "b,a,-,d")
    for q in range(n):
        w = "b" * (n - 1 - q)
        assert [member(right.with_initial(p), w) for p in range(n)] == [p == q for p in range(n)]


def test_b_words_separate_subsets():
    m = n = 3
    left, right = witness_pair("product", m, n)
    dfa, subsets = subset_construction(product_nfa(left, right))
    parts = [split_subset(s, m) for s in subsets]
    for i, (li, si) in enumerate(parts):
        for j, (lj, sj) in enumerate(parts):
            if j <= i or li != lj or any(p in left.finals for p in li):
                continue
            for q in si ^ sj:
                w = dfa.alphabet.encode("b" * (n - 1 - q))
                assert (dfa.run(w, start=i) in dfa.finals) != (dfa.run(w, start=j) in dfa.finals)
    assert minimize(dfa).n == dfa.n == 28


# -- star / reverse ----------------------------------------------------------------


@pytest.mark.parametrize("n,expected", [(3, 6), (4, 12)])
def test_star_witness(n, expected):
    assert star(witness(n, "a,b")).n == expected


def test_star_sigma_star():
    assert star(sigma_star("ab")).n == 1


@pytest.mark.parametrize("n,expected", [(3, 8), (4, 16)])
def test_reverse_witness(n, expected):
    assert reverse(witness(n, "a,b,c")).n == expected


def test_reverse_sigma_star():
    s = sigma_star("ab")
    assert reverse(s) == minimize(s)
