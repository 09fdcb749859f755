import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from splitmat.core import (
    Matroid,
    circuits,
    closure,
    components,
    contract,
    coloops,
    cyclic_flats,
    delete,
    direct_sum,
    dual,
    elements,
    flats,
    is_connected,
    is_cyclic,
    is_proper,
    is_uniform,
    mask_of,
    minor,
    proper_cyclic_flats,
    rank,
    relabel,
    restrict,
    uniform,
    validate,
)
from splitmat.canonical import is_isomorphic
from splitmat.enumeration import catalog_members
from splitmat.errors import (
    ElementOutOfRange,
    EmptyBasisList,
    EmptyGroundSet,
    ExchangeAxiomViolation,
    GroundSetTooLarge,
    MixedBasisSizes,
)
from splitmat.named import catalog

S = mask_of


# -- validate ---------------------------------------------------------------

def test_validate_uniform(make):
    assert make(3, 2, "01", "02", "12") == uniform(2, 3)


def test_validate_wheel(make, mw2):
    assert make(4, 2, "01", "02", "03", "12", "13") == mw2


def test_validate_sorts_and_dedups():
    m = validate(3, 1, [4, 1, 2, 1])
    assert m.bases == (1, 2, 4)


def test_exchange_violation_reports_pair(make):
    with pytest.raises(ExchangeAxiomViolation) as info:
        make(4, 2, "01", "23")
    assert info.value.pair == (S([0, 1]), S([2, 3]))
    assert info.value.element == 0


@pytest.mark.parametrize(
    "args, exc",
    [
        ((3, 1, []), EmptyBasisList),
        ((3, 1, [[0], [0, 1]]), MixedBasisSizes),
        ((3, 1, [[5]]), ElementOutOfRange),
        ((17, 0, [0]), GroundSetTooLarge),
    ],
)
def test_validate_errors(args, exc):
    with pytest.raises(exc):
        validate(*args)


def test_empty_matroid_is_accepted():
    m = validate(0, 0, [0])
    assert m.bases == (0,) and is_uniform(m)


# -- rank, closure, circuits ------------------------------------------------

def test_rank_examples(mw2):
    assert rank(uniform(2, 3), 0) == 0
    assert rank(mw2, S([2, 3])) == 1
    assert rank(mw2, S([0, 1, 2, 3])) == 2


def test_rank_rejects_out_of_range(mw2):
    with pytest.raises(ElementOutOfRange):
        rank(mw2, S([4]))


def test_closure_examples(mw2):
    assert closure(mw2, S([2])) == S([2, 3])
    assert closure(uniform(2, 3), S([0])) == S([0])
    assert closure(mw2, S([0, 2])) == S([0, 1, 2, 3])


def test_circuit_examples(mw2):
    assert circuits(uniform(2, 3)) == [S([0, 1, 2])]
    assert sorted(circuits(mw2)) == sorted([S([2, 3]), S([0, 1, 2]), S([0, 1, 3])])
    assert circuits(uniform(1, 1)) == []


def test_is_cyclic_examples(mw2):
    assert is_cyclic(mw2, 0) and is_cyclic(uniform(2, 3), 0)
    assert is_cyclic(mw2, S([2, 3]))
    assert not is_cyclic(uniform(2, 3), S([0, 1]))


def test_cyclic_flat_examples(mw2):
    assert cyclic_flats(mw2) == [0, S([2, 3]), S([0, 1, 2, 3])]
    assert proper_cyclic_flats(mw2) == [S([2, 3])]
    assert cyclic_flats(uniform(2, 4)) == [0, 15]
    assert proper_cyclic_flats(uniform(2, 4)) == []
    assert S([0, 1, 2, 3]) in proper_cyclic_flats(catalog("S3"))


def test_empty_set_flat_iff_loopless():
    with_loop = validate(2, 1, [[0]])
    assert 0 not in flats(with_loop)
    assert 0 in flats(uniform(1, 2))


def test_tables_match_oracles(small_catalog):
    for m in small_catalog[:60]:
        for s in range(1 << m.n):
            assert rank(m, s) == oracles.rank(m.bases, s)
            assert closure(m, s) == oracles.closure(m.bases, m.n, s)
            assert is_cyclic(m, s) == oracles.cyclic_by_union(m.bases, m.n, s)
        assert circuits(m) == oracles.circuits(m.bases, m.n)


# -- duality and minors -----------------------------------------------------

def test_dual_examples():
    assert dual(uniform(2, 3)) == uniform(1, 3)
    assert is_isomorphic(dual(catalog("S1")), catalog("S2"))
    assert is_isomorphic(dual(catalog("S3")), catalog("S3"))


def test_minor_examples(mw2):
    assert delete(uniform(2, 4), S([3])) == uniform(2, 3)
    assert contract(mw2, S([0])) == uniform(1, 3)
    assert is_isomorphic(restrict(catalog("S3"), S([0, 1, 2, 3])), mw2)


def test_deleting_everything_fails(mw2):
    with pytest.raises(EmptyGroundSet):
        delete(mw2, 15)
    with pytest.raises(EmptyGroundSet):
        contract(mw2, 15)


def test_minor_returns_labels(mw2):
    small, labels = minor(mw2, contracted=S([0]), deleted=S([2]))
    assert labels == (1, 3)
    assert small == uniform(1, 2)


def test_direct_sum_examples(mw2):
    assert direct_sum(mw2, mw2) == catalog("S0")
    assert direct_sum(uniform(1, 1), uniform(1, 1)) == uniform(2, 2)
    assert len(direct_sum(uniform(2, 3), uniform(2, 3)).bases) == 9
    with pytest.raises(GroundSetTooLarge):
        direct_sum(uniform(4, 9), uniform(4, 9))


# -- connectivity -----------------------------------------------------------

def test_component_examples():
    assert is_connected(uniform(2, 3))
    assert components(catalog("S0")) == [S([0, 1, 2, 3]), S([4, 5, 6, 7])]
    assert components(uniform(2, 2)) == [1, 2]


def test_single_element_matroids_are_connected():
    assert is_connected(uniform(1, 1)) and is_connected(uniform(0, 1))


def test_connectivity_of_empty_matroid_is_rejected():
    with pytest.raises(EmptyGroundSet):
        is_connected(Matroid(0, 0, (0,)))


def test_uniform_examples(mw2):
    assert is_uniform(uniform(2, 3))
    assert not is_uniform(mw2)


# -- invariants over the catalog --------------------------------------------

def test_double_dual_and_dual_rank(catalog7):
    for m in catalog7:
        assert dual(dual(m)) == m
        assert dual(m).r == m.n - m.r


def test_closure_axioms_exhaustive(small_catalog):
    for m in small_catalog:
        full = range(1 << m.n)
        cl = [closure(m, s) for s in full]
        for s in full:
            assert cl[s] & s == s
            assert cl[cl[s]] == cl[s]
        for s in full:
            for e in range(m.n):
                t = s | (1 << e)
                assert cl[s] & cl[t] == cl[s]


def test_components_agree_with_separation_oracle(catalog7):
    for m in catalog7:
        assert is_connected(m) != oracles.disconnected_by_separation(m.bases, m.n)
    for m in [x for x in catalog7 if x.n <= 5]:
        assert components(m) == oracles.components_by_separation(m.bases, m.n)


def test_restriction_dual_is_contraction_of_dual(small_catalog):
    for m in small_catalog:
        full = m.ground
        for z in range(1, full):
            assert dual(restrict(m, z)) == contract(dual(m), full & ~z)


def test_complement_of_proper_cyclic_flat(catalog7):
    # coloop-free: complement of a proper cyclic flat is a proper cyclic flat of the dual
    for m in catalog7:
        if coloops(m):
            continue
        d = dual(m)
        for z in proper_cyclic_flats(m):
            comp = m.ground & ~z
            assert comp in proper_cyclic_flats(d)
            assert is_proper(d, comp)


@st.composite
def labelled_matroid(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    m = draw(st.sampled_from(catalog_members(n)))
    perm = draw(st.permutations(range(n)))
    return relabel(m, perm)


@settings(max_examples=200, deadline=None)
@given(data=st.data())
def test_deletion_contraction_commute(data):
    m = data.draw(labelled_matroid())
    x = data.draw(st.integers(0, m.ground))
    y = data.draw(st.integers(0, m.ground)) & ~x
    if x | y == m.ground:
        return
    # remove X then Y (relabelled) versus Y then X (relabelled)
    keep_x = [e for e in range(m.n) if not x >> e & 1]
    y_after = mask_of(j for j, e in enumerate(keep_x) if y >> e & 1)
    keep_y = [e for e in range(m.n) if not y >> e & 1]
    x_after = mask_of(j for j, e in enumerate(keep_y) if x >> e & 1)
    assert contract(delete(m, x), y_after) == delete(contract(m, y), x_after)
    assert minor(m, y, x)[0] == contract(delete(m, x), y_after)


@settings(max_examples=200, deadline=None)
@given(data=st.data())
def test_minors_satisfy_exchange(data):
    m = data.draw(labelled_matroid())
    x = data.draw(st.integers(0, m.ground - 1))
    small = contract(m, x)
    assert validate(small.n, small.r, small.bases) == small
    assert elements(x) == tuple(e for e in range(m.n) if x >> e & 1)
