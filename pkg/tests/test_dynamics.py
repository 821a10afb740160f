import itertools

import pytest

from rightlcm.errors import RegistrationError, TruncationRequired
from rightlcm.sampling import SampleSpec
from rightlcm.semigroups import DISJOINT
from rightlcm.systems import make_system, z_times


def test_int_mult_examples(z23):
    G, P = z23.group, z23.semigroup
    two, six = P.from_int(2), P.from_int(6)
    assert z23.apply_endo(two, G.element(5)) == G.element(10)
    assert z23.preimage(two, G.element(10)) == G.element(5)
    assert z23.preimage(two, G.element(5)) is None
    assert z23.preimage(six, G.element(12)) == G.element(2)
    assert list(z23.transversal(two)) == [G.element(0), G.element(1)]
    assert z23.canon_rep(two, G.element(7)) == (G.element(1), G.element(3))
    assert z23.canon_rep(six, G.element(-1)) == (G.element(5), G.element(-1))


def test_solve_double_int(z23):
    G, P = z23.group, z23.semigroup
    two, three, four = P.from_int(2), P.from_int(3), P.from_int(4)
    k, l = z23.solve_double(two, three, G.element(3))
    assert 2 * k.payload - 3 * l.payload == 3
    assert z23.solve_double(two, four, G.element(1)) is None  # 1 not in 2Z
    assert z23.solve_double(two, three, G.identity) is not None


@pytest.mark.parametrize("key", ["Z|2,3>", "Z|-1,2,3>", "Zi|1+i,3>", "T2-shift", "F2-shift"])
def test_action_round_trips(all_systems, key):
    system = all_systems[key]
    ball = system.semigroup.enumerate_ball(2)
    gs = system.group.sample(20)
    for p in ball:
        for g in gs:
            img = system.apply_endo(p, g)
            assert system.preimage(p, img) == g
            t, k = system.canon_rep(p, g)
            assert system.group.op(t, system.apply_endo(p, k)) == g
            # transversal part is reproduced by its own decomposition
            assert system.canon_rep(p, t) == (t, system.group.identity)


@pytest.mark.parametrize("key", ["Z|2,3>", "Z|-1,2,3>", "Zi|1+i,3>", "T2-shift", "F2-shift"])
def test_transversal_prefix_inequivalent(all_systems, key):
    system = all_systems[key]
    for p in system.semigroup.enumerate_ball(2):
        prefix = list(itertools.islice(system.transversal(p), 12))
        for t, u in itertools.combinations(prefix, 2):
            diff = system.group.op(system.group.inv(t), u)
            assert not system.in_image(p, diff), (p, t, u)


def test_int_transversal_size_matches_index(z23, z_signed):
    for system in (z23, z_signed):
        for p in system.semigroup.enumerate_ball(3):
            size = system.coset_index(p)
            assert size == abs(system.semigroup.value(p))
            ts = list(system.transversal(p))
            assert len(ts) == size


def test_solve_double_well_definedness(all_systems):
    """Two distinct solver outputs differ by the image of the same group
    element under the two complement endomorphisms."""
    for system in all_systems.values():
        P, G = system.semigroup, system.group
        ball = P.enumerate_ball(2)
        gs = G.sample(8)
        for p, q in itertools.islice(itertools.product(ball, repeat=2), 25):
            meet = P.right_lcm(p, q)
            if meet is DISJOINT:
                continue
            for x in gs:
                base = system.solve_double(p, q, x)
                other = system.solve_double(p, q, x, variant=2)
                if base is None:
                    assert other is None
                    continue
                for k, l in (base, other):
                    lhs = system.apply_endo(p, k)
                    rhs = G.op(x, system.apply_endo(q, l))
                    assert lhs == rhs, (p, q, x)
                dk = G.op(G.inv(base[0]), other[0])
                dl = G.op(G.inv(base[1]), other[1])
                assert system.in_image(meet.p_comp, dk)
                assert system.in_image(meet.q_comp, dl)


def test_verify_axioms_pass(all_systems):
    for name, system in all_systems.items():
        assert system.registration_report is not None, name
        assert system.registration_report.passed, name


def test_order_axiom_failure_z46():
    with pytest.raises(RegistrationError) as err:
        z_times(4, 6)
    report = err.value.report
    fail = [c for c in report.checks if not c.passed]
    assert [c.name for c in fail] == ["order-respecting"]
    assert fail[0].witness["g"] == "12"


def test_injectivity_failure_residue():
    with pytest.raises(RegistrationError) as err:
        make_system(
            {"kind": "int-mult", "generators": [2], "group": {"kind": "cyclic", "order": 4}}
        )
    fail = [c for c in err.value.report.checks if not c.passed]
    assert "injectivity" in {c.name for c in fail}


def test_residue_system_with_coprime_action_registers():
    system = make_system(
        {"kind": "int-mult", "generators": [3], "group": {"kind": "cyclic", "order": 4}}
    )
    G, P = system.group, system.semigroup
    assert system.apply_endo(P.from_int(3), G.element(2)) == G.element(2)
    assert system.coset_index(P.from_int(3)) == 1


def test_gauss_examples(gauss):
    G, P = gauss.group, gauss.semigroup
    onei = P.from_value((1, 1))
    assert gauss.apply_endo(onei, G.element((1, 0))) == G.element((1, 1))
    assert gauss.preimage(onei, G.element((0, 2))) == G.element((1, 1))
    assert gauss.preimage(onei, G.element((1, 2))) is None
    assert gauss.coset_index(onei) == 2
    assert gauss.coset_index(P.from_value((3, 0))) == 9
    three = P.from_value((3, 0))
    ts = list(gauss.transversal(three))
    assert len(ts) == len(set(ts)) == 9


def test_shift_examples(t2_shift):
    system = t2_shift
    P, G = system.semigroup, system.group
    p1 = P.element((1,))
    pos0, pos2 = P.element((0,)), P.element((2,))
    d0 = G.from_support({pos0: 1})
    assert list(system.transversal(p1)) == [G.identity, d0]
    assert system.apply_endo(p1, d0) == G.from_support({P.element((1,)): 1})
    g = G.from_support({pos0: 1, pos2: 1})
    t, k = system.canon_rep(p1, g)
    assert t == d0
    assert k == G.from_support({P.element((1,)): 1})


def test_shift_solve_double_support_splitting(f2_shift):
    system = f2_shift
    P, G = system.semigroup, system.group
    pa, pb = P.from_word("a"), P.from_word("b")
    x = G.from_support({pa: 1, pb: 1})
    k, l = system.solve_double(pa, pb, x)
    lhs = system.apply_endo(pa, k)
    assert lhs == G.op(x, system.apply_endo(pb, l))
    # support outside aP u bP is unsolvable
    bad = G.from_support({P.identity: 1})
    assert system.solve_double(pa, pb, bad) is None


def test_infinite_transversal_requires_truncation(f2_shift):
    pa = f2_shift.semigroup.from_word("a")
    assert f2_shift.coset_index(pa) is None
    with pytest.raises(TruncationRequired):
        f2_shift.transversal_list(pa)
    assert len(f2_shift.transversal_list(pa, limit=9)) == 9


def test_registration_report_records_spec(z23):
    spec = z23.registration_report.spec
    assert spec["p_radius"] == SampleSpec().p_radius
    assert "seed" in spec
