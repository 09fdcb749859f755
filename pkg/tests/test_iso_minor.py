import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from splitmat.canonical import (
    brute_force_isomorphic,
    canonical_form,
    canonical_matroid,
    is_isomorphic,
    isomorphism,
)
from splitmat.core import dual, is_connected, is_uniform, mask_of, relabel, uniform
from splitmat.enumeration import catalog_members
from splitmat.errors import UnknownName
from splitmat.minors import apply_witness, has_minor, verify_excluded_minor
from splitmat.named import catalog

S = mask_of


# -- canonical forms --------------------------------------------------------

def test_relabel_invariance_examples(mw2):
    u = uniform(2, 3)
    assert canonical_form(u).key == canonical_form(relabel(u, (2, 0, 1))).key
    assert canonical_form(catalog("S1")).key != canonical_form(catalog("S2")).key
    assert canonical_form(mw2).key == canonical_form(dual(mw2)).key


def test_canonical_matroid_is_a_fixed_point(small_catalog):
    for m in small_catalog:
        c = canonical_matroid(m)
        assert canonical_matroid(c) == c


@settings(max_examples=150, deadline=None)
@given(data=st.data())
def test_canonical_form_invariant_under_relabelling(data):
    n = data.draw(st.integers(1, 8))
    m = data.draw(st.sampled_from(catalog_members(n)))
    perm = data.draw(st.permutations(range(n)))
    other = relabel(m, perm)
    assert canonical_form(other).key == canonical_form(m).key
    phi = isomorphism(m, other)
    assert relabel(m, phi) == other


def test_canonical_agrees_with_brute_force_up_to_five():
    pool = [m for n in range(1, 6) for m in catalog_members(n)]
    rng = random.Random(7)
    # scramble labels so equal keys cannot come from equal inputs
    pool = [relabel(m, rng.sample(range(m.n), m.n)) for m in pool]
    for a, b in itertools.combinations_with_replacement(pool, 2):
        same = canonical_form(a).key == canonical_form(b).key
        assert same == oracles.isomorphic(a.bases, a.n, b.bases, b.n)


def test_catalog_is_pairwise_non_isomorphic_at_six():
    members = catalog_members(6)
    keys = {canonical_form(m).key for m in members}
    assert len(keys) == len(members)
    by_shape = {}
    for m in members:
        by_shape.setdefault((m.r, len(m.bases)), []).append(m)
    for group in by_shape.values():
        for a, b in itertools.combinations(group, 2):
            assert not brute_force_isomorphic(a, b)


def test_is_isomorphic_examples(mw2):
    assert is_isomorphic(dual(catalog("S1")), catalog("S2"))
    assert is_isomorphic(catalog("S3"), dual(catalog("S3")))
    assert not is_isomorphic(uniform(2, 4), mw2)


def test_large_symmetric_ground_set_uses_branching():
    u = uniform(3, 10)
    assert canonical_form(u).key == canonical_form(relabel(u, tuple(reversed(range(10))))).key


# -- minors -----------------------------------------------------------------

def test_minor_examples(mw2, named):
    w = has_minor(uniform(2, 4), uniform(2, 3))
    assert (w.contracted, w.deleted) == (0, S([0]))
    assert apply_witness(uniform(2, 4), w) == uniform(2, 3)
    w = has_minor(named["S0"], mw2)
    assert w is not None and apply_witness(named["S0"], w) == mw2
    assert has_minor(uniform(3, 6), mw2) is None


def test_every_minor_is_self_minor(small_catalog):
    for m in small_catalog[::5]:
        w = has_minor(m, m)
        assert w.contracted == 0 and w.deleted == 0
        assert apply_witness(m, w) == m


def test_witnesses_rebuild_target_exactly(named, catalog7):
    for host in [m for m in catalog7 if m.n == 7][::3]:
        for target in (named["S1"], named["S3"], catalog("MW2")):
            w = has_minor(host, target)
            if w is not None:
                assert w.contracted & w.deleted == 0
                assert apply_witness(host, w) == target


def test_has_minor_matches_brute_force():
    hosts = [m for n in range(4, 7) for m in catalog_members(n)][::4]
    targets = [catalog("MW2"), uniform(2, 4), uniform(1, 2), uniform(2, 3)]
    for h in hosts:
        for t in targets:
            found = has_minor(h, t) is not None
            assert found == oracles.has_minor_brute(h.bases, h.n, t.bases, t.n)


def test_minor_relation_commutes_with_duality(named):
    pool = [m for n in range(4, 8) for m in catalog_members(n)][::7]
    targets = [catalog("MW2"), uniform(2, 4), named["S1"], named["S3"]]
    for m in pool:
        for t in targets:
            assert (has_minor(m, t) is None) == (has_minor(dual(m), dual(t)) is None)


def test_minor_relation_is_transitive_on_samples():
    chain = [catalog("S3"), catalog("MW2"), uniform(1, 2)]
    assert has_minor(chain[0], chain[1]) and has_minor(chain[1], chain[2])
    assert has_minor(chain[0], chain[2])
    pool = [m for m in catalog_members(6)][::6]
    mids = [m for n in (4, 5) for m in catalog_members(n)][::5]
    lows = [uniform(1, 2), uniform(2, 3), catalog("MW2")]
    for a in pool:
        for b in mids:
            if has_minor(a, b) is None:
                continue
            for c in lows:
                if has_minor(b, c) is not None:
                    assert has_minor(a, c) is not None


# -- named matroids ----------------------------------------------------------

def test_catalog_examples(named):
    s0 = named["S0"]
    from splitmat.core import components, restrict

    parts = components(s0)
    assert len(parts) == 2
    assert all(is_isomorphic(restrict(s0, p), catalog("MW2")) for p in parts)
    assert len(named["S1"].bases) == 12
    assert len(named["S3"].bases) == 13
    assert len(named["S4"].bases) == 14


@pytest.mark.parametrize("name", ["u_2_4", "U(2,4)", "U_2_4"])
def test_uniform_names(name):
    assert catalog(name) == uniform(2, 4)


def test_unknown_name():
    with pytest.raises(UnknownName):
        catalog("S9")


def test_named_matroids_validate(named):
    from splitmat.core import validate

    for m in named.values():
        assert validate(m.n, m.r, m.bases) == m


def test_excluded_minor_examples(named, mw2):
    assert verify_excluded_minor(named["S0"])
    assert verify_excluded_minor(named["S3"])
    assert not verify_excluded_minor(mw2)


def test_excluded_minors_pairwise_distinct(named):
    ms = [named[k] for k in ("S0", "S1", "S2", "S3", "S4")]
    for a, b in itertools.combinations(ms, 2):
        assert not brute_force_isomorphic(a, b)


def test_wheel_minor_in_connected_non_uniform_small():
    mw2 = catalog("MW2")
    for n in range(1, 7):
        for m in catalog_members(n):
            if is_connected(m) and not is_uniform(m):
                assert has_minor(m, mw2) is not None
