"""End-to-end acceptance gate.

One test per criterion: reference matchings reproduced bit-exactly, the
two-length classification swept against the exhaustive oracle, soundness of
the necessary conditions on every small multiset, the parity conjecture for
small primes, the equal-multiplicity sweeps, the transform algebra laws, and
the known non-existence results.
"""

import itertools
import math
import random
import time

import pytest

from seatmatch import (
    LengthList,
    Matching,
    TwoLengthInstance,
    check_conjecture,
    concat,
    concat_all,
    construct_consecutive,
    construct_chain,
    construct_one_x_large_a,
    construct_sparse,
    construct_two_lengths,
    construct_uniform,
    construct_uniform_even,
    construct_uniform_odd,
    decide_two_lengths,
    divisor_condition,
    even_count_condition,
    lift,
    oracle_solve,
    project,
    scale_by_unit,
    signed_sum_condition,
    skolem_matching,
    skolem_sequence,
    solve,
    two_lengths_plan,
    InfeasibleListError,
)
from seatmatch.constructors import _normalize_composite
from seatmatch.skolem import skolem_pairs

import golden


def _canon(v, edges):
    return Matching.build(v, edges)


def _inst(text, v):
    lst = LengthList.parse(text, v // 2)
    x, y = lst.support
    return TwoLengthInstance(v // 2, x, y, lst.mult[y])


def _plan_parts(inst):
    """Quotient part lists of the lifted construction, label-independently."""
    tag, a_list = two_lengths_plan(inst)
    assert a_list is not None
    norm = _normalize_composite(inst)
    nb = norm.n // norm.d
    xb, yb = norm.x // norm.d, norm.y // norm.d
    parts = []
    for ai in a_list:
        part = {}
        if nb - ai:
            part[xb] = nb - ai
        if ai:
            part[yb] = ai
        parts.append(part)
    return tag, parts


def test_criterion_1_reference_matchings():
    start = time.perf_counter()

    # single length, K_24 {9^12}
    assert construct_uniform(12, 9) == _canon(24, golden.UNIFORM_K24)

    # two lengths with an even one, K_40 {5^6,12^14} and K_42 {7^13,12^8}
    assert construct_two_lengths(_inst("5^6,12^14", 40)) == _canon(40, golden.TWOLEN_K40)
    assert construct_two_lengths(_inst("7^13,12^8", 42)) == _canon(42, golden.TWOLEN_K42)

    # {1^5, 7^4} of K_18, boundary subcase of the {1^a, x^(n-a)} packing
    assert construct_one_x_large_a(9, 7, 5) == _canon(18, golden.ONE_X_K18)
    outcome = solve(LengthList.parse("1^5,7^4", 9), 18)
    assert outcome.report is not None
    assert outcome.report.route == "two-length:3/direct-odd"
    assert outcome.report.matching == _canon(18, golden.ONE_X_K18)

    # odd/odd blow-up, K_84 {15^25,35^17}
    assert construct_two_lengths(_inst("15^25,35^17", 84)) == _canon(84, golden.ODD_PAIR_K84)

    # the five two-length decomposition plans
    expected_tags = ["composite-even/I", "composite-even/I", "composite-odd/I",
                     "composite-odd/III", "composite-odd/III"]
    for (n, x, y, a, nbar, parts), want_tag in zip(golden.DECOMPOSITION_CASES,
                                                   expected_tags):
        inst = TwoLengthInstance(n, x, y, a)
        tag, got = _plan_parts(inst)
        assert tag == want_tag, (n, x, y, a, tag)
        assert sorted(map(sorted, (p.items() for p in got))) == \
            sorted(map(sorted, (p.items() for p in parts))), (n, x, y, a)
        assert all(sum(p.values()) == nbar for p in got)
        construct_two_lengths(inst)  # self-verifying

    # Skolem order 5
    assert skolem_sequence(5) == golden.SKOLEM_5_SEQUENCE
    assert _canon(10, skolem_pairs(5)) == _canon(10, golden.SKOLEM_5_EDGES)

    # equal-multiplicity families
    assert construct_uniform_odd(16, 4) == _canon(32, golden.UNIFORM_ODD_K32)
    assert construct_uniform_even(12, 4) == _canon(24, golden.UNIFORM_EVEN_K24)
    assert construct_uniform_even(56, 7) == _canon(112, golden.UNIFORM_EVEN_K112)
    assert construct_consecutive(28, 4) == _canon(56, golden.CONSECUTIVE_K56)

    # sparse packing, K_70 {1^21,2^7,4,5^2,10^4}
    lst = LengthList.parse("1^21,2^7,4,5^2,10^4", 35)
    assert construct_sparse(lst) == _canon(70, golden.SPARSE_K70)

    # concatenation and the reduced-length union law on K_4 + K_6
    f1 = _canon(4, golden.CONCAT_PART_K4)
    f2 = _canon(6, golden.CONCAT_PART_K6)
    glued = concat(f1, f2)
    assert glued == _canon(10, golden.CONCAT_RESULT_K10)
    assert glued.reduced_lengths() == sorted(
        f1.reduced_lengths() + f2.reduced_lengths())
    # the circular length list is NOT the union of the parts' circular lists
    assert glued.length_list() == LengthList.parse("1^2,2,3,4", 5)
    part_lengths = sorted(itertools.chain(
        (min(b - a, 4 - (b - a)) for a, b in f1.edges),
        (min(b - a, 6 - (b - a)) for a, b in f2.edges)))
    assert part_lengths == [1, 1, 1, 2, 2] != sorted(glued.length_list().lengths())

    assert time.perf_counter() - start < 1.0


def test_criterion_2_two_length_oracle_sweep():
    start = time.perf_counter()
    checked = 0
    for n in range(2, 13):
        for x in range(1, n + 1):
            for y in range(x + 1, n + 1):
                for a in range(1, n):
                    inst = TwoLengthInstance(n, x, y, a)
                    verdict = decide_two_lengths(inst)
                    found, _ = oracle_solve(inst.length_list(), 2 * n)
                    assert verdict.is_feasible == (found is not None), \
                        (n, x, y, a, verdict)
                    checked += 1
    assert checked == sum(math.comb(n, 2) * (n - 1) for n in range(2, 13))
    assert time.perf_counter() - start < 300


def test_criterion_3_uniform_sweep():
    start = time.perf_counter()
    for n in range(1, 41):
        for x in range(1, n + 1):
            d = math.gcd(x, 2 * n)
            if n % d == 0:
                matching = construct_uniform(n, x)  # self-verifying
                assert matching.length_list() == LengthList.from_counts({x: n}, n)
            else:
                with pytest.raises(InfeasibleListError):
                    construct_uniform(n, x)
    assert time.perf_counter() - start < 10


def test_criterion_4_necessary_conditions_sound():
    start = time.perf_counter()
    for n in range(1, 8):
        v = 2 * n
        for combo in itertools.combinations_with_replacement(range(1, n + 1), n):
            lst = LengthList.from_lengths(combo, n)
            found, _ = oracle_solve(lst, v)
            if found is None:
                continue
            assert even_count_condition(lst), lst
            assert divisor_condition(lst, v) == (True, None), lst
            if all(m % 2 for m in lst.support):
                assert signed_sum_condition(lst, n), lst
    assert time.perf_counter() - start < 600


def test_criterion_5_conjecture_small_primes():
    start = time.perf_counter()
    for p in (3, 5, 7):
        report = check_conjecture(p)
        assert report.agrees, report.counterexamples
        assert report.lists_checked == math.comb(2 * p - 2, p)
    assert time.perf_counter() - start < 120


@pytest.mark.slow
def test_criterion_5_conjecture_p11():
    report = check_conjecture(11, workers=4)
    assert report.agrees, report.counterexamples
    assert report.lists_checked == math.comb(20, 11)


def test_criterion_6_equal_multiplicity_sweeps():
    start = time.perf_counter()
    # odd lengths with equal multiplicity: need t | n
    for t in range(2, 101):
        for n in range(t, 101, t):
            construct_uniform_odd(n, t)
        for n in range(2, 101):
            if n % t:
                with pytest.raises(InfeasibleListError):
                    construct_uniform_odd(n, t)
                break
    # even lengths: need n divisible by t (t even) or 4t (t odd)
    for t in range(2, 101):
        s = t if t % 2 == 0 else 4 * t
        for n in range(s, 101, s):
            construct_uniform_even(n, t)
        for n in range(t, 101, t):
            if n % s:
                with pytest.raises(InfeasibleListError):
                    construct_uniform_even(n, t)
    # consecutive lengths: t even, or n/t = 0, 1 mod 4
    for t in range(1, 101):
        for n in range(t, 101, t):
            top = n // t
            if t % 2 == 0 or top % 4 in (0, 1):
                construct_consecutive(n, t)
            else:
                with pytest.raises(InfeasibleListError):
                    construct_consecutive(n, t)
    # chains exist for every odd n >= 3
    for n in range(3, 100, 2):
        construct_chain(n, "odd")
        construct_chain(n, "even")
    assert time.perf_counter() - start < 30


def _random_matching(rng, v):
    verts = list(range(v))
    rng.shuffle(verts)
    return Matching.build(v, list(zip(verts[::2], verts[1::2])))


def test_criterion_7_transform_laws():
    start = time.perf_counter()
    rng = random.Random(20240817)

    for _ in range(1000):  # lift/project round trip
        c = rng.randint(1, 5)
        n = rng.randint(1, 30 // c)
        parts = [_random_matching(rng, 2 * n) for _ in range(c)]
        host = lift(parts)
        assert host.v == 2 * n * c
        dec = project(host, c)
        assert list(dec.parts) == parts
        assert lift(list(dec.parts)) == host

    for _ in range(1000):  # concatenation: reduced lengths are additive
        v1 = 2 * rng.randint(1, 15)
        v2 = 2 * rng.randint(1, 15)
        f1, f2 = _random_matching(rng, v1), _random_matching(rng, v2)
        glued = concat(f1, f2)
        assert glued.reduced_lengths() == sorted(
            f1.reduced_lengths() + f2.reduced_lengths())

    for _ in range(1000):  # unit scaling is invertible
        v = 2 * rng.randint(1, 30)
        units = [x for x in range(1, v) if math.gcd(x, v) == 1]
        x = rng.choice(units)
        f = _random_matching(rng, v)
        scaled = scale_by_unit(f, x)
        assert scale_by_unit(scaled, pow(x, -1, v)) == f

    assert time.perf_counter() - start < 10


def test_criterion_8_nonexistence_by_exhaustion():
    start = time.perf_counter()
    found, _ = oracle_solve(LengthList.parse("4^3,6^7", 10), 20)
    assert found is None

    for n in range(3, 9):
        for x in range(1, n):
            for y in range(x + 1, n):
                lst = LengthList.from_counts({x: 1, y: 1, n: n - 2}, n)
                found, _ = oracle_solve(lst, 2 * n)
                assert found is None, (n, x, y)
    assert time.perf_counter() - start < 60
