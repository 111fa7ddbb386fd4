"""Combinatorial model of a (d+2)-angulated cluster category of type A_n.

Indecomposable objects are (d+1)-subsets of Z/m, m = n + 2d + 1, whose
elements are pairwise non-adjacent on the cycle (all cyclic gaps >= 2).
Canonical form is the ascending tuple of residues in 1..m.

The degree-d extension pairing between indecomposables is modelled by
strict cyclic interleaving: Ext is one-dimensional when the two subsets
are disjoint and alternate around the cycle, zero otherwise.  The d-fold
suspension subtracts 1 from every coordinate mod m.  Hom-level data
(single AR cycle, one-dimensional maps to an object and its AR successor)
is only available for n = 2.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from math import comb

Obj = tuple[int, ...]
ObjectSum = tuple[Obj, ...]


class ModelError(ValueError):
    """Invalid parameters, malformed objects, or broken model state."""


class UnsupportedRankError(ModelError):
    """Hom-level operation requested at a rank the model does not realize."""


@dataclass(frozen=True)
class ModelParams:
    n: int
    d: int

    def __post_init__(self):
        if self.n < 1:
            raise ModelError(f"rank n must be >= 1, got {self.n}")
        if self.d < 1:
            raise ModelError(f"dimension d must be >= 1, got {self.d}")

    @property
    def m(self) -> int:
        return self.n + 2 * self.d + 1


@dataclass(frozen=True)
class Flags:
    rigid: bool
    maximal_rigid: bool
    self_perpendicular: bool
    cluster_tilting: bool


def is_admissible(elems, m: int) -> bool:
    """True when ``elems`` is a gap->=2 subset of 1..m in ascending order."""
    if len(set(elems)) != len(elems):
        return False
    s = sorted(elems)
    if s != list(elems):
        return False
    if s[0] < 1 or s[-1] > m:
        return False
    if any(b - a < 2 for a, b in zip(s, s[1:])):
        return False
    return len(s) < 2 or (s[0] + m) - s[-1] >= 2


def canonicalize(elems, m: int) -> Obj:
    return tuple(sorted((e - 1) % m + 1 for e in elems))


def indecomposable_count(n: int, d: int) -> int:
    """Closed-form count of admissible (d+1)-subsets of Z/(n+2d+1).

    This is the standard count of (d+1)-element independent sets on an
    m-cycle, m * C(m-d-1, d+1) / (m-d-1).
    """
    m = n + 2 * d + 1
    return m * comb(m - d - 1, d + 1) // (m - d - 1)


class Model:
    """Immutable model instance: parameters, ordered objects, crossing graph."""

    def __init__(self, n: int, d: int):
        self.params = ModelParams(n, d)
        m = self.params.m
        self.objects: tuple[Obj, ...] = tuple(
            s for s in combinations(range(1, m + 1), d + 1) if is_admissible(s, m)
        )
        if len(self.objects) != indecomposable_count(n, d):
            raise ModelError("object count disagrees with closed-form formula")
        self.index = {obj: i for i, obj in enumerate(self.objects)}
        self.crossing_neighbors: tuple[frozenset[Obj], ...] = tuple(
            frozenset(y for y in self.objects if crosses(x, y)) for x in self.objects
        )
        self._succ: dict[Obj, Obj] | None = None
        self._ct_cache: set[ObjectSum] = set()

    @property
    def n(self) -> int:
        return self.params.n

    @property
    def d(self) -> int:
        return self.params.d

    @property
    def m(self) -> int:
        return self.params.m

    def check_object(self, X) -> Obj:
        X = tuple(X)
        if X not in self.index:
            raise ModelError(f"not an object of the model: {X}")
        return X

    def check_sum(self, summands) -> ObjectSum:
        """Normalize any iterable of objects to basic form (sorted, distinct)."""
        return tuple(sorted({self.check_object(x) for x in summands}))

    def crossing_edges(self) -> list[tuple[Obj, Obj]]:
        return [
            (x, y)
            for i, x in enumerate(self.objects)
            for y in sorted(self.crossing_neighbors[i])
            if x < y
        ]


def build_model(n: int, d: int) -> Model:
    return Model(n, d)


def crosses(X: Obj, Y: Obj) -> bool:
    """Strict cyclic interleaving of two disjoint admissible subsets."""
    if set(X) & set(Y):
        return False
    merged = sorted([(e, 0) for e in X] + [(e, 1) for e in Y])
    # equal sizes, so linear alternation already implies cyclic alternation
    return all(a[1] != b[1] for a, b in zip(merged, merged[1:]))


def suspend(model: Model, X, k: int = 1) -> Obj:
    """k-th power of the d-fold suspension: subtract k from each coordinate mod m."""
    X = model.check_object(X)
    return canonicalize((e - k for e in X), model.m)


def ext_dim(model: Model, A, B) -> int:
    """dim Ext^d between two (sums of) objects, additive over summand pairs."""
    A = _as_sum(A)
    B = _as_sum(B)
    A = model.check_sum(A)
    B = model.check_sum(B)
    return sum(1 for x in A for y in B if crosses(x, y))


def _as_sum(value) -> tuple:
    if value and isinstance(value[0], int):
        return (tuple(value),)
    return tuple(tuple(x) for x in value)


def ar_successor(model: Model, X) -> Obj:
    """The unique admissible single-coordinate +1 increment (n = 2 only)."""
    if model.n != 2:
        raise UnsupportedRankError(f"AR successor is only realized for n = 2, not n = {model.n}")
    X = model.check_object(X)
    if model._succ is None:
        succ = {}
        for obj in model.objects:
            cands = []
            for i in range(len(obj)):
                cand = canonicalize(obj[:i] + (obj[i] + 1,) + obj[i + 1 :], model.m)
                if cand in model.index:
                    cands.append(cand)
            if len(cands) != 1:
                raise ModelError(f"AR successor of {obj} is not unique: {cands}")
            succ[obj] = cands[0]
        model._succ = succ
    return model._succ[X]


def ar_distance(model: Model, X, Y) -> int:
    """Number of AR-successor steps from X to Y (n = 2 only)."""
    X = model.check_object(X)
    Y = model.check_object(Y)
    cur, steps = X, 0
    while cur != Y:
        cur = ar_successor(model, cur)
        steps += 1
        if steps > len(model.objects):
            raise ModelError("AR orbit did not close")
    return steps


def hom_dim_cycle(model: Model, X, Y) -> int:
    """dim Hom between indecomposables: 1 iff Y is X or its AR successor (n = 2)."""
    if model.n != 2:
        raise UnsupportedRankError(f"Hom data is only realized for n = 2, not n = {model.n}")
    X = model.check_object(X)
    Y = model.check_object(Y)
    return 1 if Y == X or Y == ar_successor(model, X) else 0


def quotient_hom_dim_cycle(model: Model, X, Y, T) -> int:
    """dim Hom in the quotient by maps factoring through the suspended tilting object.

    The one-dimensional map X -> Y dies exactly when it factors through
    add of the suspension of T: the identity of X factors iff X lies there;
    the arrow to the successor factors iff either endpoint does.
    """
    if model.n != 2:
        raise UnsupportedRankError(f"Hom data is only realized for n = 2, not n = {model.n}")
    X = model.check_object(X)
    Y = model.check_object(Y)
    T = model.check_sum(T)
    if T not in model._ct_cache:
        if not classify(model, T).cluster_tilting:
            raise ModelError("T must be a cluster tilting object")
        model._ct_cache.add(T)
    base = hom_dim_cycle(model, X, Y)
    if base == 0:
        return 0
    shifted = {suspend(model, t, 1) for t in T}
    if Y == X:
        return 0 if X in shifted else 1
    return 0 if (X in shifted or Y in shifted) else 1


def classify(model: Model, X) -> Flags:
    """Rigidity-type flags of a (sum of) object(s), quantified over indecomposables.

    cluster_tilting uses the cardinality criterion |X| = C(n+d-1, d) among
    maximal rigid objects; the CLI reports the flag as "by cardinality".
    """
    supp = model.check_sum(_as_sum(X)) if X else ()
    supp_set = frozenset(supp)
    nb = lambda x: model.crossing_neighbors[model.index[x]]
    rigid = all(not (nb(x) & supp_set) for x in supp)

    # maximal d-rigid: supp == {Y : Ext(X + Y, X + Y) = 0}
    maximal = True
    for y in model.objects:
        union = supp_set | {y}
        vanishes = all(not (nb(x) & union) for x in union)
        if vanishes != (y in supp_set):
            maximal = False
            break

    # d-self-perpendicular: supp == {Y : Ext(X, Y) = 0}
    if supp:
        self_perp = all((y in supp_set) == all(y not in nb(x) for x in supp) for y in model.objects)
    else:
        self_perp = len(model.objects) == 0

    ct = rigid and maximal and len(supp) == comb(model.n + model.d - 1, model.d)
    return Flags(rigid, maximal, self_perp, ct)


def enumerate_maximal_rigid(model: Model) -> list[ObjectSum]:
    """All inclusion-maximal crossing-free sets of objects, sorted.

    Maximal independent sets of the crossing graph, via Bron-Kerbosch with
    pivoting on the complement graph.  Output order is independent of the
    search order.
    """
    objs = model.objects
    n = len(objs)
    nb = [frozenset(model.index[y] for y in model.crossing_neighbors[i]) for i in range(n)]
    # complement adjacency (independent sets = cliques in the complement)
    co = [frozenset(range(n)) - nb[i] - {i} for i in range(n)]
    found: list[tuple[int, ...]] = []

    def expand(clique: list[int], cand: set[int], excl: set[int]):
        if not cand and not excl:
            found.append(tuple(sorted(clique)))
            return
        pivot = max(cand | excl, key=lambda v: len(cand & co[v]))
        for v in sorted(cand - co[pivot]):
            expand(clique + [v], cand & co[v], excl & co[v])
            cand.remove(v)
            excl.add(v)

    expand([], set(range(n)), set())
    return sorted(tuple(objs[i] for i in ms) for ms in found)


# ---------------------------------------------------------------------------
# rendering and parsing


def format_object(X, m: int) -> str:
    if m <= 9:
        return "".join(str(e) for e in X)
    return ",".join(str(e) for e in X)


def parse_object(text: str, m: int) -> Obj:
    text = text.strip()
    if not text:
        raise ModelError("empty object string")
    if "," in text:
        try:
            elems = tuple(int(p) for p in text.split(","))
        except ValueError:
            raise ModelError(f"malformed object string: {text!r}") from None
    elif text.isdigit():
        if m > 9:
            raise ModelError(
                f"compact digit form {text!r} is ambiguous for m = {m}; use commas"
            )
        elems = tuple(int(c) for c in text)
    else:
        raise ModelError(f"malformed object string: {text!r}")
    if not is_admissible(elems, m):
        raise ModelError(f"not an admissible object for m = {m}: {text!r}")
    return elems


def format_sum(summands, m: int) -> str:
    return "+".join(format_object(x, m) for x in summands) if summands else "0"


def parse_sum(text: str, m: int) -> ObjectSum:
    text = text.strip()
    if text == "0" or not text:
        return ()
    return tuple(sorted({parse_object(part, m) for part in text.split("+")}))


def model_to_json(model: Model) -> str:
    doc = {
        "schema": "taurigid.model",
        "version": 1,
        "params": {"n": model.n, "d": model.d, "m": model.m},
        "objects": [format_object(x, model.m) for x in model.objects],
        "crossing_edges": [
            [format_object(x, model.m), format_object(y, model.m)]
            for x, y in model.crossing_edges()
        ],
    }
    return json.dumps(doc, indent=2, sort_keys=True)


def model_from_json(text: str) -> Model:
    doc = json.loads(text)
    if doc.get("schema") != "taurigid.model" or doc.get("version") != 1:
        raise ModelError("unrecognized model document")
    params = doc["params"]
    model = build_model(params["n"], params["d"])
    listed = [parse_object(s, model.m) for s in doc["objects"]]
    if listed != list(model.objects):
        raise ModelError("object list in document disagrees with rebuilt model")
    edges = {(parse_object(a, model.m), parse_object(b, model.m)) for a, b in doc["crossing_edges"]}
    if edges != set(model.crossing_edges()):
        raise ModelError("crossing edges in document disagree with rebuilt model")
    return model
