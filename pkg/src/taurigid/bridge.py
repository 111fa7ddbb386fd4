"""Dictionary between the combinatorial model and the module category.

For a cluster tilting object T in the rank-two model, the morphism functor
out of T lands in modules over Gamma = kA_{d+1}/rad^2.  This module wires
the two sides together: it orders the summands of T against the quiver
vertices, tabulates the image of every indecomposable, realizes the
object-to-pair map (the summands outside the suspended tilting part go to
a module, the rest to a projective), classifies pairs, and verifies the
structural identities relating extension dimensions on the combinatorial
side to Hom spaces and higher translates on the module side.

Image dimensions are read off the extension pairing: by the 2d-Calabi-Yau
symmetry, dim Hom(T_i, X) equals dim Ext^d(X, Sigma^d T_i), and no
correction term appears because T is rigid.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field

from . import algebra as alg
from . import cyclic
from .cyclic import Model, Obj, ObjectSum, UnsupportedRankError


class BridgeError(ValueError):
    """Context construction or pair bookkeeping failed."""


@dataclass(frozen=True)
class FormalModule:
    """A multiset of catalog indecomposables with its realized representation."""

    entries: tuple[str, ...]
    rep: alg.Representation = field(compare=False, repr=False)

    def counter(self) -> Counter:
        return Counter(self.entries)

    def is_zero(self) -> bool:
        return not self.entries


@dataclass(frozen=True)
class RigidPair:
    """A candidate pair: module part in the image category, projective part."""

    m_part: FormalModule
    p_part: FormalModule


@dataclass(frozen=True)
class PairFlags:
    tau_d_rigid_pair: bool
    maximal_tau_d_rigid_pair: bool


def canonical_T(model: Model) -> ObjectSum:
    """The canonical cluster tilting object: all objects containing residue 1.

    Any two members share the element 1, so the sum is rigid outright; the
    family has exactly C(n+d-1, d) members.  At rank two this is the
    lexicographic walk from {1, 3, ..., 2d+1} that keeps bumping the
    rightmost coordinate that admits it.
    """
    T = tuple(sorted(x for x in model.objects if 1 in x))
    if not cyclic.classify(model, T).cluster_tilting:
        raise BridgeError("canonical object failed the cluster tilting check (model bug)")
    return T


class TiltingContext:
    """Immutable bundle: model, cluster tilting T, Gamma, and the image table."""

    def __init__(self, model: Model, T):
        if model.n != 2:
            raise UnsupportedRankError(
                f"module-side contexts are only realized for n = 2, not n = {model.n}"
            )
        self.model = model
        self.T = model.check_sum(T)
        if not cyclic.classify(model, self.T).cluster_tilting:
            raise BridgeError(f"not a cluster tilting object: {self.T}")
        self.d = model.d
        self.gamma = alg.build_linear_radsq(self.d + 1)

        # order the summands along the AR successor chain; the earliest
        # summand (the one that is nobody's successor within T) sits at the
        # top vertex d+1, matching the projective numbering of the images
        succs_within = {cyclic.ar_successor(model, t) for t in self.T} & set(self.T)
        starts = [t for t in self.T if t not in succs_within]
        if len(starts) != 1:
            raise BridgeError(f"summands of {self.T} do not form an AR chain")
        chain = [starts[0]]
        while len(chain) < len(self.T):
            nxt = cyclic.ar_successor(model, chain[-1])
            if nxt not in self.T:
                raise BridgeError(f"summands of {self.T} do not form an AR chain")
            chain.append(nxt)
        self.vertex_summand = {self.d + 1 - k: t for k, t in enumerate(chain)}

        self.shifted_T = frozenset(cyclic.suspend(model, t, 1) for t in self.T)
        self._sigma_vertex = {
            i: cyclic.suspend(model, self.vertex_summand[i], 1) for i in self.vertex_summand
        }
        self.images: dict[Obj, FormalModule] = {}
        for X in model.objects:
            self.images[X] = self._image(X)
        for i, t in self.vertex_summand.items():
            if self.images[t].entries != (f"P{i}",):
                raise BridgeError(
                    f"image of vertex-{i} summand {t} is {self.images[t].entries}, "
                    f"expected P{i}: context pattern violated"
                )
        self.d_entries = tuple(
            sorted(
                {fm.entries[0] for fm in self.images.values() if fm.entries},
                key=self.gamma.catalog_sort_key,
            )
        )
        self.image_preimage = {
            fm.entries[0]: X for X, fm in self.images.items() if fm.entries
        }
        self.projectives = tuple(f"P{i}" for i in range(self.d + 1, 0, -1))
        self._hom_cache: dict[tuple[str, str], int] = {}
        self._tau_cache: dict[str, Counter] = {}

    def _image(self, X: Obj) -> FormalModule:
        if X in self.shifted_T:
            return FormalModule((), alg.zero_module(self.gamma))
        dims = tuple(
            cyclic.ext_dim(self.model, X, self._sigma_vertex[i])
            for i in range(1, self.d + 2)
        )
        name = self.gamma.by_dims.get(dims)
        if name is None:
            raise BridgeError(f"image dimension vector {dims} of {X} matches no catalog entry")
        return FormalModule((name,), self.gamma.catalog_module(name))

    # -- cached scalar tables ------------------------------------------------

    def hom_entries(self, a: str, b: str) -> int:
        key = (a, b)
        if key not in self._hom_cache:
            self._hom_cache[key] = alg.hom_dim(
                self.gamma.catalog_module(a), self.gamma.catalog_module(b)
            )
        return self._hom_cache[key]

    def tau_entry(self, a: str) -> Counter:
        if a not in self._tau_cache:
            self._tau_cache[a] = alg.decompose(alg.tau_d(self.gamma.catalog_module(a), self.d))
        return self._tau_cache[a]

    def hom_multiset(self, src: Counter, tgt: Counter) -> int:
        return sum(
            ca * cb * self.hom_entries(a, b) for a, ca in src.items() for b, cb in tgt.items()
        )

    def tau_multiset(self, entries: Counter) -> Counter:
        out: Counter = Counter()
        for a, c in entries.items():
            for b, cb in self.tau_entry(a).items():
                out[b] += c * cb
        return out

    def formal_module(self, names) -> FormalModule:
        names = tuple(sorted((self.gamma.resolve_name(nm) for nm in names),
                             key=self.gamma.catalog_sort_key))
        for nm in names:
            if nm not in self.d_entries:
                raise BridgeError(f"{nm} is not in the image category")
        return FormalModule(names, alg.sum_of_catalog(self.gamma, names))

    def make_pair(self, m_names, p_names) -> RigidPair:
        p_resolved = tuple(sorted((self.gamma.resolve_name(nm) for nm in p_names),
                                  key=self.gamma.catalog_sort_key))
        for nm in p_resolved:
            if not nm.startswith("P"):
                raise BridgeError(f"{nm} is not projective")
        return RigidPair(
            self.formal_module(m_names),
            FormalModule(p_resolved, alg.sum_of_catalog(self.gamma, p_resolved)),
        )


def build_context(model: Model, T) -> TiltingContext:
    return TiltingContext(model, T)


def image_module(ctx: TiltingContext, X) -> FormalModule:
    return ctx.images[ctx.model.check_object(X)]


def delta(ctx: TiltingContext, X) -> RigidPair:
    """Split X against the suspended tilting part and push both halves over.

    Summands outside add Sigma^d T map to their image modules; each summand
    inside maps to the image of its desuspension, which is projective.
    """
    supp = ctx.model.check_sum(cyclic._as_sum(X)) if X else ()
    m_names, p_names = [], []
    for x in supp:
        if x in ctx.shifted_T:
            p_names.extend(ctx.images[cyclic.suspend(ctx.model, x, -1)].entries)
        else:
            m_names.extend(ctx.images[x].entries)
    return ctx.make_pair(m_names, p_names)


def delta_inverse(ctx: TiltingContext, pair: RigidPair) -> ObjectSum:
    """The unique basic object mapping to the pair, via the inverted image table."""
    summands = []
    for part, shift in ((pair.m_part, 0), (pair.p_part, 1)):
        counts = part.counter()
        for name, c in counts.items():
            if c > 1:
                raise BridgeError(f"pair component {name} has multiplicity {c}; "
                                  "not the image of a basic object")
            if name not in ctx.image_preimage:
                raise BridgeError(f"{name} is not in the image table")
            pre = ctx.image_preimage[name]
            summands.append(cyclic.suspend(ctx.model, pre, shift) if shift else pre)
    out = tuple(sorted(summands))
    if len(set(out)) != len(out):
        raise BridgeError("pair components overlap; not the image of a basic object")
    return out


def pair_classify(ctx: TiltingContext, pair: RigidPair) -> PairFlags:
    """Rigid-pair and maximal-rigid-pair predicates, quantified over indecomposables.

    Additivity of Hom and of the translate, plus support-determination of
    add, reduce both universal conditions to the finitely many
    indecomposables of the image category and the projectives.
    """
    M = pair.m_part.counter()
    P = pair.p_part.counter()
    tau_M = ctx.tau_multiset(M)
    rigid = ctx.hom_multiset(M, tau_M) == 0 and ctx.hom_multiset(P, M) == 0

    maximal = True
    m_support = set(M)
    for n_name in ctx.d_entries:
        N = Counter({n_name: 1})
        vanish = (
            ctx.hom_multiset(M, ctx.tau_multiset(N)) == 0
            and ctx.hom_multiset(N, tau_M) == 0
            and ctx.hom_multiset(P, N) == 0
        )
        if vanish != (n_name in m_support):
            maximal = False
            break
    if maximal:
        p_support = set(P)
        for q_name in ctx.projectives:
            vanish = ctx.hom_multiset(Counter({q_name: 1}), M) == 0
            if vanish != (q_name in p_support):
                maximal = False
                break
    return PairFlags(rigid, maximal)


def format_pair(ctx: TiltingContext, pair: RigidPair) -> str:
    def side(fm: FormalModule) -> str:
        return "+".join(fm.entries) if fm.entries else "0"

    return f"({side(pair.m_part)}, {side(pair.p_part)})"


def iter_basic_objects(model: Model):
    """All basic objects (including zero), as sorted summand tuples, in mask order."""
    objs = model.objects
    for mask in range(1 << len(objs)):
        yield tuple(objs[i] for i in range(len(objs)) if mask >> i & 1)


def image_table(ctx: TiltingContext) -> list[tuple[Obj, FormalModule]]:
    return [(X, ctx.images[X]) for X in ctx.model.objects]


def delta_table(ctx: TiltingContext) -> list[tuple[ObjectSum, RigidPair]]:
    return [(X, delta(ctx, X)) for X in cyclic.enumerate_maximal_rigid(ctx.model)]


# ---------------------------------------------------------------------------
# verifiers


@dataclass
class CheckReport:
    check: str
    passed: bool
    checked: int
    counterexamples: list[str]

    MAX_LISTED = 20

    def note(self, text: str):
        self.passed = False
        if len(self.counterexamples) < self.MAX_LISTED:
            self.counterexamples.append(text)


CHECK_IDS = (
    "nakayama",
    "resolution",
    "tau-translation",
    "quotient-ses",
    "dim-formula",
    "ext-vanish",
    "add-lemma",
    "bijection",
    "theorem-a",
)


def verify(ctx: TiltingContext, check: str, seed: int = 0, sample_count: int = 100):
    """Run one verifier (or all of them); returns CheckReport(s)."""
    if check == "all":
        return [verify(ctx, c, seed=seed, sample_count=sample_count) for c in CHECK_IDS]
    if check not in CHECK_IDS:
        raise BridgeError(f"unknown check {check!r}; expected one of {CHECK_IDS + ('all',)}")
    return _CHECKS[check](ctx, seed, sample_count)


def _fmt_obj(ctx, X) -> str:
    return cyclic.format_object(X, ctx.model.m)


def _fmt_sum(ctx, X) -> str:
    return cyclic.format_sum(X, ctx.model.m)


def _check_nakayama(ctx: TiltingContext, seed, sample_count) -> CheckReport:
    # the Nakayama image of each projective matches the image of the doubly
    # suspended tilting summand
    rep = CheckReport("nakayama", True, 0, [])
    for i in range(1, ctx.d + 2):
        rep.checked += 1
        lhs = alg.decompose(alg.nakayama_projective(ctx.gamma, i))
        target = cyclic.suspend(ctx.model, ctx.vertex_summand[i], 2)
        rhs = ctx.images[target].counter()
        if lhs != rhs:
            rep.note(f"nu P{i} = {dict(lhs)} but image of {_fmt_obj(ctx, target)} is {dict(rhs)}")
    return rep


def _check_resolution(ctx: TiltingContext, seed, sample_count) -> CheckReport:
    rep = CheckReport("resolution", True, 0, [])
    for X in ctx.model.objects:
        if X in ctx.shifted_T:
            continue
        rep.checked += 1
        M = ctx.images[X].rep
        res = alg.min_proj_resolution(M, ctx.d)
        name = _fmt_obj(ctx, X)
        for v in range(ctx.gamma.nvert):
            if res.augmentation.vertex_rank(v) != M.dims[v]:
                rep.note(f"{name}: cover not surjective at vertex {v + 1}")
        ranks = [res.augmentation.vertex_rank(v) for v in range(ctx.gamma.nvert)]
        for k, dmap in enumerate(res.differentials):
            if not alg.is_radical_map(res.terms[k + 1], res.terms[k], dmap):
                rep.note(f"{name}: differential {k + 1} is not radical")
            for v in range(ctx.gamma.nvert):
                expected = res.terms[k].rep.dims[v] - ranks[v]
                if dmap.vertex_rank(v) != expected:
                    rep.note(f"{name}: resolution not exact at stage {k} vertex {v + 1}")
            ranks = [dmap.vertex_rank(v) for v in range(ctx.gamma.nvert)]
    return rep


def _check_tau_translation(ctx: TiltingContext, seed, sample_count) -> CheckReport:
    rep = CheckReport("tau-translation", True, 0, [])
    for X in ctx.model.objects:
        if X in ctx.shifted_T:
            continue
        rep.checked += 1
        lhs = alg.decompose(alg.tau_d(ctx.images[X].rep, ctx.d))
        rhs = ctx.images[cyclic.suspend(ctx.model, X, 1)].counter()
        if lhs != rhs:
            rep.note(
                f"translate of image {_fmt_obj(ctx, X)} is {dict(lhs)}, "
                f"image of suspension is {dict(rhs)}"
            )
    return rep


def _check_quotient_ses(ctx: TiltingContext, seed, sample_count) -> CheckReport:
    rep = CheckReport("quotient-ses", True, 0, [])
    model = ctx.model
    for X in model.objects:
        for Y in model.objects:
            rep.checked += 1
            lhs = cyclic.ext_dim(model, X, Y)
            rhs = cyclic.quotient_hom_dim_cycle(
                model, Y, cyclic.suspend(model, X, 1), ctx.T
            ) + cyclic.quotient_hom_dim_cycle(model, X, cyclic.suspend(model, Y, 1), ctx.T)
            if lhs != rhs:
                rep.note(f"ext({_fmt_obj(ctx, X)},{_fmt_obj(ctx, Y)}) = {lhs} != {rhs}")
    return rep


def _dim_formula_sample(ctx: TiltingContext, seed: int, sample_count: int):
    model = ctx.model
    pairs = [((x,), (y,)) for x in model.objects for y in model.objects]
    maximal = cyclic.enumerate_maximal_rigid(model)
    pairs += [(a, b) for a in maximal for b in maximal]
    rng = random.Random(seed)
    nobj = len(model.objects)
    for _ in range(sample_count):
        xm = rng.randrange(1 << nobj)
        ym = rng.randrange(1 << nobj)
        pairs.append(
            (
                tuple(model.objects[i] for i in range(nobj) if xm >> i & 1),
                tuple(model.objects[i] for i in range(nobj) if ym >> i & 1),
            )
        )
    return pairs


def _four_terms(ctx: TiltingContext, px: RigidPair, py: RigidPair) -> int:
    M, P = px.m_part.counter(), px.p_part.counter()
    N, Q = py.m_part.counter(), py.p_part.counter()
    return (
        ctx.hom_multiset(M, ctx.tau_multiset(N))
        + ctx.hom_multiset(N, ctx.tau_multiset(M))
        + ctx.hom_multiset(P, N)
        + ctx.hom_multiset(Q, M)
    )


def _check_dim_formula(ctx: TiltingContext, seed, sample_count) -> CheckReport:
    rep = CheckReport("dim-formula", True, 0, [])
    for X, Y in _dim_formula_sample(ctx, seed, sample_count):
        rep.checked += 1
        lhs = cyclic.ext_dim(ctx.model, X, Y)
        rhs = _four_terms(ctx, delta(ctx, X), delta(ctx, Y))
        if lhs != rhs:
            rep.note(f"ext({_fmt_sum(ctx, X)}, {_fmt_sum(ctx, Y)}) = {lhs}, four-term sum = {rhs}")
    return rep


def _check_ext_vanish(ctx: TiltingContext, seed, sample_count) -> CheckReport:
    rep = CheckReport("ext-vanish", True, 0, [])
    for X, Y in _dim_formula_sample(ctx, seed, sample_count):
        rep.checked += 1
        lhs = cyclic.ext_dim(ctx.model, X, Y) == 0
        rhs = _four_terms(ctx, delta(ctx, X), delta(ctx, Y)) == 0
        if lhs != rhs:
            rep.note(f"vanishing mismatch at ({_fmt_sum(ctx, X)}, {_fmt_sum(ctx, Y)})")
    return rep


def _delta_masks(ctx: TiltingContext):
    """Per-object (module-part bit, projective-part bit) for subset arithmetic."""
    m_bits = {name: 1 << i for i, name in enumerate(ctx.d_entries)}
    p_bits = {name: 1 << i for i, name in enumerate(ctx.projectives)}
    per_obj = []
    for x in ctx.model.objects:
        if x in ctx.shifted_T:
            name = ctx.images[cyclic.suspend(ctx.model, x, -1)].entries[0]
            per_obj.append((0, p_bits[name]))
        else:
            per_obj.append((m_bits[ctx.images[x].entries[0]], 0))
    return per_obj


def _check_add_lemma(ctx: TiltingContext, seed, sample_count) -> CheckReport:
    rep = CheckReport("add-lemma", True, 0, [])
    objs = ctx.model.objects
    per_obj = _delta_masks(ctx)
    n = len(objs)
    masks = []
    for mask in range(1 << n):
        mm = pm = 0
        for i in range(n):
            if mask >> i & 1:
                mm |= per_obj[i][0]
                pm |= per_obj[i][1]
        masks.append((mask, mm, pm))
    for xmask, xm, xp in masks:
        for ymask, ym, yp in masks:
            rep.checked += 1
            in_add = ymask & xmask == ymask
            pair_in_add = (ym & xm == ym) and (yp & xp == yp)
            if in_add != pair_in_add:
                X = tuple(objs[i] for i in range(n) if xmask >> i & 1)
                Y = tuple(objs[i] for i in range(n) if ymask >> i & 1)
                rep.note(f"add mismatch: X={_fmt_sum(ctx, X)} Y={_fmt_sum(ctx, Y)}")
                if len(rep.counterexamples) >= rep.MAX_LISTED:
                    return rep
    return rep


def _check_bijection(ctx: TiltingContext, seed, sample_count) -> CheckReport:
    # the object-to-pair map is injective onto all pairs, round-trips, and
    # restricts to rigid <-> rigid pair and self-perpendicular <-> maximal pair
    rep = CheckReport("bijection", True, 0, [])
    seen = set()
    for X in iter_basic_objects(ctx.model):
        rep.checked += 1
        pair = delta(ctx, X)
        key = (pair.m_part.entries, pair.p_part.entries)
        if key in seen:
            rep.note(f"pair {format_pair(ctx, pair)} hit twice (at {_fmt_sum(ctx, X)})")
        seen.add(key)
        back = delta_inverse(ctx, pair)
        if back != X:
            rep.note(f"round trip failed at {_fmt_sum(ctx, X)}: got {_fmt_sum(ctx, back)}")
        flags = cyclic.classify(ctx.model, X)
        pflags = pair_classify(ctx, pair)
        if flags.rigid != pflags.tau_d_rigid_pair:
            rep.note(f"rigid mismatch at {_fmt_sum(ctx, X)}")
        if flags.self_perpendicular != pflags.maximal_tau_d_rigid_pair:
            rep.note(f"maximality mismatch at {_fmt_sum(ctx, X)}")
    expected = 2 ** len(ctx.d_entries) * 2 ** (ctx.d + 1)
    if len(seen) != expected:
        rep.note(f"image has {len(seen)} pairs, expected {expected}")
    return rep


def _check_theorem_a(ctx: TiltingContext, seed, sample_count) -> CheckReport:
    rep = CheckReport("theorem-a", True, 0, [])
    for X in iter_basic_objects(ctx.model):
        rep.checked += 1
        flags = cyclic.classify(ctx.model, X)
        chain_ok = (
            (not flags.cluster_tilting or flags.self_perpendicular)
            and (not flags.self_perpendicular or flags.maximal_rigid)
            and (not flags.maximal_rigid or flags.rigid)
        )
        if not chain_ok:
            rep.note(f"implication chain broken at {_fmt_sum(ctx, X)}: {flags}")
        if flags.self_perpendicular != flags.maximal_rigid:
            rep.note(f"self-perpendicular vs maximal mismatch at {_fmt_sum(ctx, X)}")
    return rep


_CHECKS = {
    "nakayama": _check_nakayama,
    "resolution": _check_resolution,
    "tau-translation": _check_tau_translation,
    "quotient-ses": _check_quotient_ses,
    "dim-formula": _check_dim_formula,
    "ext-vanish": _check_ext_vanish,
    "add-lemma": _check_add_lemma,
    "bijection": _check_bijection,
    "theorem-a": _check_theorem_a,
}
