"""Acceptance suite: one test per criterion, printing one PASS/FAIL line each.

Run `pytest tests/test_acceptance.py -v -s` to see the per-criterion lines.
Every comparison is exact; no tolerances exist anywhere in the package.
"""

from collections import Counter
from contextlib import contextmanager
from itertools import combinations

import pytest

from taurigid import algebra as alg
from taurigid import bridge, cyclic
from taurigid.cyclic import build_model, parse_sum


@contextmanager
def criterion(num, desc):
    try:
        yield
    except BaseException:
        print(f"criterion {num:2d}: FAIL  {desc}")
        raise
    print(f"criterion {num:2d}: PASS  {desc}")


@pytest.fixture(scope="module")
def model23():
    return build_model(2, 3)


@pytest.fixture(scope="module")
def ctx23(model23):
    return bridge.build_context(model23, bridge.canonical_T(model23))


@pytest.fixture(scope="module")
def model21():
    return build_model(2, 1)


@pytest.fixture(scope="module")
def ctx21(model21):
    return bridge.build_context(model21, bridge.canonical_T(model21))


def brute_force_objects(n, d):
    m = n + 2 * d + 1
    return [
        s
        for s in combinations(range(1, m + 1), d + 1)
        if all(b - a >= 2 for a, b in zip(s, s[1:])) and (s[0] + m) - s[-1] >= 2
    ]


def ar_shift(model, X, steps):
    for _ in range(steps):
        X = cyclic.ar_successor(model, X)
    return X


def test_criterion_01_model_reproduction(model23):
    with criterion(1, "build_model(2,3) lists the nine objects in AR order"):
        assert [cyclic.format_object(x, 9) for x in model23.objects] == [
            "1357", "1358", "1368", "1468", "2468", "2469", "2479", "2579", "3579",
        ]
        # the listed order is the AR successor cycle
        for i, X in enumerate(model23.objects):
            assert cyclic.ar_successor(model23, X) == model23.objects[(i + 1) % 9]


def test_criterion_02_ext_rule(model23):
    with criterion(2, "Ext support = the two objects at AR distances 4 and 5"):
        for X in model23.objects:
            partners = {Y for Y in model23.objects if cyclic.ext_dim(model23, X, Y) == 1}
            assert partners == {ar_shift(model23, X, 4), ar_shift(model23, X, 5)}


FIG2 = {
    "1357": ("P4",), "1358": ("P3",), "1368": ("P2",), "1468": ("P1",),
    "2468": ("I1",), "2469": (), "2479": (), "2579": (), "3579": (),
}


def test_criterion_03_image_golden_table(ctx23):
    with criterion(3, "image table matches the functor-action golden table"):
        for X in ctx23.model.objects:
            assert bridge.image_module(ctx23, X).entries == FIG2[cyclic.format_object(X, 9)]


FIG4 = {
    "1357+1358+1368+1468": (("P4", "P3", "P2", "P1"), ()),
    "1358+1368+1468+2468": (("P3", "P2", "P1", "I1"), ()),
    "1368+1468+2468+2469": (("P2", "P1", "I1"), ("P4",)),
    "1468+2468+2469+2479": (("P1", "I1"), ("P4", "P3")),
    "2468+2469+2479+2579": (("I1",), ("P4", "P3", "P2")),
    "2469+2479+2579+3579": ((), ("P4", "P3", "P2", "P1")),
    "1357+2479+2579+3579": (("P4",), ("P3", "P2", "P1")),
    "1357+1358+2579+3579": (("P4", "P3"), ("P2", "P1")),
    "1357+1358+1368+3579": (("P4", "P3", "P2"), ("P1",)),
    "1357+1468+2479": (("P4", "P1"), ("P3",)),
    "1358+2468+2579": (("P3", "I1"), ("P2",)),
    "1368+2469+3579": (("P2",), ("P4", "P1")),
}


def test_criterion_04_maximal_rigid_golden_table(model23, ctx23):
    with criterion(4, "12 maximal rigid objects, pair table row-by-row, 9 tilting"):
        got = cyclic.enumerate_maximal_rigid(model23)
        assert {cyclic.format_sum(s, 9) for s in got} == set(FIG4)
        for s in got:
            pair = bridge.delta(ctx23, s)
            m_names, p_names = FIG4[cyclic.format_sum(s, 9)]
            assert pair.m_part.entries == m_names
            assert pair.p_part.entries == p_names
            flags = cyclic.classify(model23, s)
            assert flags.cluster_tilting == (len(s) == 4)


def four_term_sum(ctx, X, Y):
    px, py = bridge.delta(ctx, X), bridge.delta(ctx, Y)
    M, P = px.m_part.counter(), px.p_part.counter()
    N, Q = py.m_part.counter(), py.p_part.counter()
    return (
        ctx.hom_multiset(M, ctx.tau_multiset(N))
        + ctx.hom_multiset(N, ctx.tau_multiset(M))
        + ctx.hom_multiset(P, N)
        + ctx.hom_multiset(Q, M)
    )


def test_criterion_05_dimension_formula(model23, ctx23):
    with criterion(5, "four-term dimension identity: 81 + 144 ordered pairs"):
        pairs = [((x,), (y,)) for x in model23.objects for y in model23.objects]
        maximal = cyclic.enumerate_maximal_rigid(model23)
        pairs += [(a, b) for a in maximal for b in maximal]
        assert len(pairs) == 81 + 144
        for X, Y in pairs:
            assert cyclic.ext_dim(model23, X, Y) == four_term_sum(ctx23, X, Y)


def test_criterion_06_translate_lemma(model23, ctx23):
    with criterion(6, "translate of image = image of suspension; tau_3 I(1) = P(4)"):
        assert alg.decompose(
            alg.tau_d(alg.standard_module(ctx23.gamma, "injective", 1), 3)
        ) == Counter({"P4": 1})
        for X in model23.objects:
            if X in ctx23.shifted_T:
                continue
            lhs = alg.decompose(alg.tau_d(ctx23.images[X].rep, 3))
            rhs = ctx23.images[cyclic.suspend(model23, X, 1)].counter()
            assert lhs == rhs


def test_criterion_07_nakayama_lemma(ctx23):
    with criterion(7, "Nakayama image of P(i) = image of doubly suspended summand"):
        for i in range(1, 5):
            lhs = alg.decompose(alg.nakayama_projective(ctx23.gamma, i))
            target = cyclic.suspend(ctx23.model, ctx23.vertex_summand[i], 2)
            assert lhs == ctx23.images[target].counter()
        # concrete instance: nu P(4) is the image of 1358, that is P(3)
        assert alg.decompose(alg.nakayama_projective(ctx23.gamma, 4)) == Counter({"P3": 1})
        assert ctx23.images[(1, 3, 5, 8)].entries == ("P3",)


def test_criterion_08_implication_chain(ctx23):
    with criterion(8, "implication chain and equivalence over all 512 basic objects"):
        report = bridge.verify(ctx23, "theorem-a")
        assert report.checked == 512
        assert report.passed, report.counterexamples


def pair_flags_bruteforce(ctx, pair):
    """Definition-level pair predicates, quantified over all basic modules of
    the image category and all basic projectives, with fresh linear solves."""
    gamma, d = ctx.gamma, ctx.d
    M, P = pair.m_part.rep, pair.p_part.rep
    tau_M = alg.tau_d(M, d)
    rigid = alg.hom_dim(M, tau_M) == 0 and alg.hom_dim(P, M) == 0
    m_supp = set(pair.m_part.entries)
    maximal = True
    for k in range(len(ctx.d_entries) + 1):
        for names in combinations(ctx.d_entries, k):
            N = alg.sum_of_catalog(gamma, names)
            vanish = (
                alg.hom_dim(M, alg.tau_d(N, d)) == 0
                and alg.hom_dim(N, tau_M) == 0
                and alg.hom_dim(P, N) == 0
            )
            maximal &= vanish == (set(names) <= m_supp)
    p_supp = set(pair.p_part.entries)
    for k in range(len(ctx.projectives) + 1):
        for names in combinations(ctx.projectives, k):
            Q = alg.sum_of_catalog(gamma, names)
            vanish = alg.hom_dim(Q, M) == 0
            maximal &= vanish == (set(names) <= p_supp)
    return bridge.PairFlags(rigid, maximal)


def test_criterion_09_pair_bijection(model23, ctx23):
    with criterion(9, "bijection 512 -> 512 with both restrictions; pairs re-verified"):
        report = bridge.verify(ctx23, "bijection")
        assert report.checked == 512
        assert report.passed, report.counterexamples
        for s in cyclic.enumerate_maximal_rigid(model23):
            pair = bridge.delta(ctx23, s)
            assert pair_flags_bruteforce(ctx23, pair) == bridge.PairFlags(True, True)


PENTAGON_IMAGES = {"13": ("P2",), "14": ("P1",), "24": ("I1",), "25": (), "35": ()}
PENTAGON_DELTA = {
    "13+14": (("P2", "P1"), ()),
    "14+24": (("P1", "I1"), ()),
    "24+25": (("I1",), ("P2",)),
    "25+35": ((), ("P2", "P1")),
    "13+35": (("P2",), ("P1",)),
}


def test_criterion_10a_pentagon_suite(model21, ctx21):
    with criterion(10, "pentagon model passes the full suite against oracles (part a)"):
        # objects = pentagon diagonals, from the independent subset filter
        assert list(model21.objects) == brute_force_objects(2, 1)
        # crossing = the two objects at AR distances 2 and 3
        for X in model21.objects:
            partners = {Y for Y in model21.objects if cyclic.ext_dim(model21, X, Y) == 1}
            assert partners == {ar_shift(model21, X, 2), ar_shift(model21, X, 3)}
        # image and pair golden tables (derived by hand)
        for text, entries in PENTAGON_IMAGES.items():
            assert bridge.image_module(ctx21, parse_sum(text, 5)[0]).entries == entries
        triangulations = cyclic.enumerate_maximal_rigid(model21)
        assert len(triangulations) == 5
        assert {cyclic.format_sum(s, 5) for s in triangulations} == set(PENTAGON_DELTA)
        for s in triangulations:
            pair = bridge.delta(ctx21, s)
            assert (pair.m_part.entries, pair.p_part.entries) == PENTAGON_DELTA[
                cyclic.format_sum(s, 5)
            ]
            assert cyclic.classify(model21, s).cluster_tilting
            assert pair_flags_bruteforce(ctx21, pair) == bridge.PairFlags(True, True)
        # dimension formula, exhaustive over indecomposable and maximal pairs
        pairs = [((x,), (y,)) for x in model21.objects for y in model21.objects]
        pairs += [(a, b) for a in triangulations for b in triangulations]
        for X, Y in pairs:
            assert cyclic.ext_dim(model21, X, Y) == four_term_sum(ctx21, X, Y)
        # translate and Nakayama instances: tau_1 I(1) = P(2), nu P(i) as images
        assert alg.decompose(
            alg.tau_d(alg.standard_module(ctx21.gamma, "injective", 1), 1)
        ) == Counter({"P2": 1})
        # everything else through the verifier suite
        reports = bridge.verify(ctx21, "all", seed=0, sample_count=32)
        assert all(r.passed for r in reports), [
            (r.check, r.counterexamples) for r in reports if not r.passed
        ]
        bij = next(r for r in reports if r.check == "bijection")
        assert bij.checked == 32


def test_criterion_10b_no_golden_scales():
    with criterion(10, "self-consistency at (2,5) and (3,3) (part b)"):
        for n, d in [(2, 5), (3, 3)]:
            model = build_model(n, d)
            objs = brute_force_objects(n, d)
            assert list(model.objects) == objs
            assert len(objs) == cyclic.indecomposable_count(n, d)
            shifted = [cyclic.suspend(model, X, 1) for X in model.objects]
            assert sorted(shifted) == list(model.objects)
            for X in model.objects:
                cur = X
                for _ in range(model.m):
                    cur = cyclic.suspend(model, cur, 1)
                assert cur == X
            for X in model.objects:
                for Y in model.objects:
                    e = cyclic.ext_dim(model, X, Y)
                    assert e == cyclic.ext_dim(model, Y, X)
                    assert e == cyclic.ext_dim(
                        model, cyclic.suspend(model, X, 1), cyclic.suspend(model, Y, 1)
                    )
        # at (2,5) the module side exists: the pair map is a bijection on all
        # 2^13 basic objects
        model = build_model(2, 5)
        ctx = bridge.build_context(model, bridge.canonical_T(model))
        seen = set()
        for X in bridge.iter_basic_objects(model):
            pair = bridge.delta(ctx, X)
            seen.add((pair.m_part.entries, pair.p_part.entries))
            assert bridge.delta_inverse(ctx, pair) == X
        assert len(seen) == 2 ** len(ctx.d_entries) * 2 ** (ctx.d + 1) == 8192
