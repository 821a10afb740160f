import itertools

import pytest

from rightlcm.errors import ContractError
from rightlcm.monomials import (
    ZERO,
    AlgebraElement,
    adjoint,
    algebra_add,
    algebra_adjoint,
    algebra_from_json,
    algebra_mult,
    algebra_scale,
    algebra_to_json,
    canonicalize,
    identity_monomial,
    monomial,
    monomial_from_json,
    monomial_to_json,
    mult,
    projection,
    projection_product,
)
from rightlcm.scalars import ONE, RationalComplex
from rightlcm.semidirect import EMPTY_IDEAL
from rightlcm.semigroups import DISJOINT


def m_int(system, g, p, q, h):
    return monomial(
        system,
        system.group.element(g),
        system.semigroup.from_int(p),
        system.semigroup.from_int(q),
        system.group.element(h),
    )


def random_monomials(system, count, seed=13, radius=2, g_count=10):
    import random

    rng = random.Random(seed)
    ball = system.semigroup.enumerate_ball(radius)
    gs = system.group.sample(g_count)
    return [
        monomial(system, rng.choice(gs), rng.choice(ball), rng.choice(ball), rng.choice(gs))
        for _ in range(count)
    ]


# -- worked examples ---------------------------------------------------------------


def test_canonicalize_examples(z23, z_signed):
    assert m_int(z23, 3, 3, 2, 3) == m_int(z23, 0, 3, 2, 1)
    ident = identity_monomial(z23)
    assert m_int(z23, 0, 1, 1, 0) == ident
    s = z_signed
    assert m_int(s, 0, -2, 3, 0).data == m_int(s, 0, 2, -3, 0).data
    g, p, q, h = m_int(s, 0, -2, 3, 0).data
    assert s.semigroup.value(p) == 2 and s.semigroup.value(q) == -3


def test_canonicalize_idempotent(all_systems):
    for system in all_systems.values():
        for m in random_monomials(system, 60):
            g, p, q, h = m.data
            assert canonicalize(system, g, p, q, h) == m


def test_mult_examples(z23):
    assert mult(m_int(z23, 0, 1, 2, 0), m_int(z23, 3, 3, 1, 0)) == m_int(z23, 3, 3, 2, 1)
    assert mult(m_int(z23, 1, 2, 2, 1), m_int(z23, 0, 3, 3, 0)) == m_int(z23, 3, 6, 6, 3)
    assert mult(m_int(z23, 0, 2, 2, 0), m_int(z23, 1, 2, 2, 1)) is ZERO
    ident = identity_monomial(z23)
    for m in random_monomials(z23, 20):
        assert mult(ident, m) == m == mult(m, ident)
        assert mult(ZERO, m) is ZERO and mult(m, ZERO) is ZERO


def test_adjoint_examples(z23):
    assert adjoint(m_int(z23, 3, 3, 2, 1)) == m_int(z23, -1, 2, 3, 0)
    e = projection(z23, z23.group.element(1), z23.semigroup.from_int(2))
    assert adjoint(e) == e
    assert adjoint(ZERO) is ZERO


def test_involution(all_systems):
    for system in all_systems.values():
        for m in random_monomials(system, 120):
            assert adjoint(adjoint(m)) == m


def test_associativity_sampled(all_systems):
    for system in all_systems.values():
        pool = random_monomials(system, 40)
        import random

        rng = random.Random(5)
        for _ in range(400):
            m1, m2, m3 = rng.choice(pool), rng.choice(pool), rng.choice(pool)
            assert mult(mult(m1, m2), m3) == mult(m1, mult(m2, m3))


def test_anti_multiplicativity(all_systems):
    for system in all_systems.values():
        pool = random_monomials(system, 30)
        import random

        rng = random.Random(6)
        for _ in range(300):
            m1, m2 = rng.choice(pool), rng.choice(pool)
            assert adjoint(mult(m1, m2)) == mult(adjoint(m2), adjoint(m1))


def test_solver_independence(all_systems):
    for system in all_systems.values():
        pool = random_monomials(system, 30)
        import random

        rng = random.Random(7)
        for _ in range(200):
            m1, m2 = rng.choice(pool), rng.choice(pool)
            assert mult(m1, m2) == mult(m1, m2, solver_variant=3)


def test_projection_product_examples(z23):
    e12 = m_int(z23, 1, 2, 2, 1)
    e03 = m_int(z23, 0, 3, 3, 0)
    assert projection_product(e12, e03) == m_int(z23, 3, 6, 6, 3)
    assert projection_product(e12, e12) == e12
    e02 = m_int(z23, 0, 2, 2, 0)
    e14 = m_int(z23, 1, 4, 4, 1)
    assert projection_product(e02, e14) is ZERO
    with pytest.raises(ContractError):
        projection_product(m_int(z23, 0, 1, 2, 0), e03)


def test_projection_product_triple_agreement(all_systems):
    """The dedicated coset formula, the generic Wick product and the
    constructible-ideal intersection all coincide on projections."""
    import random

    for system in all_systems.values():
        sd = system.semidirect()
        ball = system.semigroup.enumerate_ball(2)
        gs = system.group.sample(8)
        rng = random.Random(8)
        for _ in range(150):
            g, h = rng.choice(gs), rng.choice(gs)
            p, q = rng.choice(ball), rng.choice(ball)
            e1, e2 = projection(system, g, p), projection(system, h, q)
            via_formula = projection_product(e1, e2)
            via_mult = mult(e1, e2)
            assert via_formula == via_mult
            inter = sd.ideal_intersect(sd.element(g, p), sd.element(h, q))
            if inter is EMPTY_IDEAL:
                assert via_formula is ZERO
            else:
                assert via_formula == projection(system, inter.rep.g, inter.rep.p)


def test_transversal_orthogonality(all_systems):
    for system in all_systems.values():
        for p in system.semigroup.enumerate_ball(2):
            prefix = system.transversal_list(p, limit=8)
            for t, u in itertools.combinations(prefix, 2):
                assert mult(projection(system, t, p), projection(system, u, p)) is ZERO


def test_trivial_group_degeneration(f2_trivial, n2_trivial):
    """With G = {1} the Wick product collapses to the pure right-LCM
    isometry calculus on pairs (p, q)."""
    for system in (f2_trivial, n2_trivial):
        P = system.semigroup
        one = system.group.identity
        ball = P.enumerate_ball(2)
        for p1, q1, p2, q2 in itertools.islice(
            itertools.product(ball, repeat=4), 2000
        ):
            m1 = monomial(system, one, p1, q1, one)
            m2 = monomial(system, one, p2, q2, one)
            got = mult(m1, m2)
            meet = P.right_lcm(q1, p2)
            if meet is DISJOINT:
                assert got is ZERO
            else:
                expected = monomial(
                    system,
                    one,
                    P.compose(p1, meet.p_comp),
                    P.compose(q2, meet.q_comp),
                    one,
                )
                assert got == expected


# -- formal sums -------------------------------------------------------------------


def test_algebra_bilinearity(z23):
    pool = random_monomials(z23, 10)
    m1, m2, m3 = pool[0], pool[1], pool[2]
    two = RationalComplex.of(2)
    a = algebra_add(AlgebraElement.of(m1), algebra_scale(two, AlgebraElement.of(m2)))
    b = AlgebraElement.of(m3)
    lhs = algebra_mult(a, b)
    rhs = algebra_add(
        AlgebraElement.of(mult(m1, m3)),
        algebra_scale(two, AlgebraElement.of(mult(m2, m3))),
    )
    assert lhs == rhs


def test_algebra_orthogonality(z23):
    e02 = AlgebraElement.of(m_int(z23, 0, 2, 2, 0))
    e12 = AlgebraElement.of(m_int(z23, 1, 2, 2, 1))
    assert algebra_mult(e02, e12).is_zero()


def test_algebra_associativity_on_sums(all_systems):
    import random

    for system in all_systems.values():
        pool = random_monomials(system, 12)
        rng = random.Random(9)
        for _ in range(40):
            coeff = RationalComplex.of(rng.randint(-3, 3), rng.randint(-3, 3))
            a = algebra_add(
                AlgebraElement.of(rng.choice(pool)),
                algebra_scale(coeff, AlgebraElement.of(rng.choice(pool))),
            )
            b = algebra_add(
                AlgebraElement.of(rng.choice(pool)), AlgebraElement.of(rng.choice(pool))
            )
            c = AlgebraElement.of(rng.choice(pool))
            assert algebra_mult(algebra_mult(a, b), c) == algebra_mult(a, algebra_mult(b, c))


def test_algebra_adjoint_is_involutive_antihomomorphism(z23):
    pool = random_monomials(z23, 8)
    a = algebra_add(AlgebraElement.of(pool[0]), AlgebraElement.of(pool[1]))
    b = algebra_add(
        AlgebraElement.of(pool[2]),
        algebra_scale(RationalComplex.of(0, 1), AlgebraElement.of(pool[3])),
    )
    assert algebra_adjoint(algebra_adjoint(a)) == a
    assert algebra_adjoint(algebra_mult(a, b)) == algebra_mult(
        algebra_adjoint(b), algebra_adjoint(a)
    )


def test_serialization_round_trips(all_systems):
    for system in all_systems.values():
        for m in random_monomials(system, 25):
            assert monomial_from_json(system, monomial_to_json(m)) == m
        assert monomial_from_json(system, monomial_to_json(ZERO)) is ZERO
        pool = random_monomials(system, 4)
        a = algebra_add(
            algebra_scale(RationalComplex.of(2, -1), AlgebraElement.of(pool[0])),
            AlgebraElement.of(pool[1]),
        )
        assert algebra_from_json(system, algebra_to_json(a)) == a
