import random

import pytest

from rightlcm.monomials import ZERO, Monomial, canonicalize, monomial, mult
from rightlcm.regular import (
    as_partial_map,
    check_li_relations,
    compose,
    empty_map,
    equal_on_window,
    evaluate,
    ideal_indicator,
    identity_map,
    is_injective_on,
    translation,
)
from rightlcm.sampling import SampleSpec


def random_monomials(system, count, seed=13, radius=2, g_count=10):
    rng = random.Random(seed)
    ball = system.semigroup.enumerate_ball(radius)
    gs = system.group.sample(g_count)
    return [
        monomial(system, rng.choice(gs), rng.choice(ball), rng.choice(ball), rng.choice(gs))
        for _ in range(count)
    ]


def test_evaluation_examples(z23):
    sd = z23.semidirect()
    G, P = z23.group, z23.semigroup
    s2_star = monomial(z23, G.element(0), P.from_int(1), P.from_int(2), G.element(0))
    f = as_partial_map(sd, s2_star)
    assert evaluate(f, sd.element(G.element(4), P.from_int(6))) == sd.element(
        G.element(2), P.from_int(3)
    )
    assert evaluate(f, sd.element(G.element(1), P.from_int(3))) is None
    ident = identity_map(sd)
    for s in sd.window(SampleSpec(window_g_count=4, window_p_radius=1)):
        assert evaluate(ident, s) == s


def test_zero_maps_to_empty(z23):
    sd = z23.semidirect()
    assert as_partial_map(sd, ZERO).is_empty
    w = sd.window(SampleSpec(window_g_count=4, window_p_radius=1))
    assert all(evaluate(empty_map(sd), s) is None for s in w)


def test_homomorphism_oracle(all_systems, small_spec):
    """lambda(m1 m2) agrees pointwise with lambda(m1) o lambda(m2), and
    the product vanishes exactly when the composed domain is empty."""
    for system in all_systems.values():
        sd = system.semidirect()
        window = sd.window(small_spec)
        pool = random_monomials(system, 30)
        rng = random.Random(3)
        for _ in range(150):
            m1, m2 = rng.choice(pool), rng.choice(pool)
            product = mult(m1, m2)
            composed = compose(as_partial_map(sd, m1), as_partial_map(sd, m2))
            eq, wit = equal_on_window(as_partial_map(sd, product), composed, window)
            assert eq, wit
            if product is ZERO:
                assert composed.is_empty
            # a non-Zero product's domain generator witnesses non-emptiness
            if not composed.is_empty:
                assert product is not ZERO


def test_unit_twist_invariance(z_signed, small_spec):
    """Raw quadruples and their canonical forms induce the same partial
    injection."""
    system = z_signed
    sd = system.semidirect()
    window = sd.window(small_spec)
    rng = random.Random(4)
    ball = system.semigroup.enumerate_ball(2)
    gs = system.group.sample(8)
    for _ in range(60):
        g, h = rng.choice(gs), rng.choice(gs)
        p, q = rng.choice(ball), rng.choice(ball)
        raw = as_partial_map(sd, Monomial(system, (g, p, q, h)))
        canon = as_partial_map(sd, canonicalize(system, g, p, q, h))
        eq, wit = equal_on_window(raw, canon, window)
        assert eq, wit


def test_maps_separate_canonical_monomials(all_systems, small_spec):
    for system in all_systems.values():
        sd = system.semidirect()
        window = sd.window(small_spec)
        pool = list(dict.fromkeys(random_monomials(system, 25)))
        for i, m1 in enumerate(pool):
            for m2 in pool[i + 1 :]:
                eq, _ = equal_on_window(
                    as_partial_map(sd, m1), as_partial_map(sd, m2), window
                )
                assert not eq, (m1, m2)


def test_injectivity_on_window(all_systems, small_spec):
    for system in all_systems.values():
        sd = system.semidirect()
        window = sd.window(small_spec)
        for m in random_monomials(system, 15):
            ok, wit = is_injective_on(as_partial_map(sd, m), window)
            assert ok, wit


def test_indicator_counterexample(z23, small_spec):
    sd = z23.semidirect()
    window = sd.window(small_spec)
    e02 = ideal_indicator(sd, sd.element(z23.group.element(0), z23.semigroup.from_int(2)))
    e12 = ideal_indicator(sd, sd.element(z23.group.element(1), z23.semigroup.from_int(2)))
    eq, wit = equal_on_window(e02, e12, window)
    assert not eq and wit is not None


def test_translation_composition(z23, small_spec):
    sd = z23.semidirect()
    window = sd.window(small_spec)
    a = sd.element(z23.group.element(1), z23.semigroup.from_int(2))
    b = sd.element(z23.group.element(0), z23.semigroup.from_int(3))
    lhs = compose(translation(sd, a), translation(sd, b))
    rhs = translation(sd, sd.compose(a, b))
    assert equal_on_window(lhs, rhs, window)[0]


@pytest.mark.parametrize(
    "key", ["Z|2,3>", "Z|-1,2,3>", "Zi|1+i,3>", "T2-shift", "F2-shift"]
)
def test_li_relations(all_systems, key, small_spec):
    system = all_systems[key]
    report = check_li_relations(system.semidirect(), small_spec)
    assert report.passed, report.to_json()["failures"]


def test_li_relation_l4_worked_instance(z23, small_spec):
    sd = z23.semidirect()
    window = sd.window(small_spec)
    G, P = z23.group, z23.semigroup
    e_a = ideal_indicator(sd, sd.element(G.element(1), P.from_int(2)))
    e_b = ideal_indicator(sd, sd.element(G.element(0), P.from_int(3)))
    e_ab = ideal_indicator(sd, sd.element(G.element(3), P.from_int(6)))
    assert equal_on_window(compose(e_a, e_b), e_ab, window)[0]
