"""Exact module calculus over the bound path algebra kA_N / rad^2.

The quiver is linear, 1 -> 2 -> ... -> N, and every length-two path is a
relation, so the algebra has total dimension 2N - 1 and every
indecomposable module is thin: a simple S(v), or a two-vertex module
supported on an adjacent pair {i, i+1} with the arrow acting as the
identity.  The latter is simultaneously P(i) and I(i+1).

All arithmetic is exact over the rationals (see linalg); nothing in this
module has a tolerance.  Representations store one matrix per arrow,
shaped (dim target) x (dim source), acting on column vectors.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from . import linalg
from .linalg import Matrix


class AlgebraError(ValueError):
    """Malformed algebra input or a failed internal consistency check."""


class Algebra:
    """The bound path algebra kA_N / rad^2 together with its module catalog."""

    def __init__(self, nvert: int):
        if nvert < 1:
            raise AlgebraError(f"vertex count must be >= 1, got {nvert}")
        self.nvert = nvert
        self.dimension = 2 * nvert - 1
        self._catalog: list[tuple[str, tuple[int, ...]]] = []
        for i in range(1, nvert):
            self._catalog.append((f"P{i}", self._dims({i, i + 1})))
        self._catalog.append((f"P{nvert}", self._dims({nvert})))
        if nvert >= 2:
            self._catalog.append(("I1", self._dims({1})))
        for i in range(2, nvert):
            self._catalog.append((f"S{i}", self._dims({i})))
        self.by_dims = {dims: name for name, dims in self._catalog}
        self._aliases = {}
        for j in range(2, nvert + 1):
            self._aliases[f"I{j}"] = f"P{j - 1}"
        self._aliases["S1"] = "I1" if nvert >= 2 else "P1"
        self._aliases[f"S{nvert}"] = f"P{nvert}"
        self._aliases["I1"] = "I1" if nvert >= 2 else "P1"

    def _dims(self, support) -> tuple[int, ...]:
        return tuple(1 if v in support else 0 for v in range(1, self.nvert + 1))

    def catalog_names(self) -> list[str]:
        return [name for name, _ in self._catalog]

    def resolve_name(self, name: str) -> str:
        """Canonical catalog name for any of the P/I/S aliases."""
        if name in self.by_dims.values():
            return name
        if name in self._aliases:
            return self._aliases[name]
        raise AlgebraError(f"unknown catalog entry {name!r} for kA_{self.nvert}/rad^2")

    def catalog_module(self, name: str) -> "Representation":
        name = self.resolve_name(name)
        dims = next(d for nm, d in self._catalog if nm == name)
        return _thin_module(self, dims)

    def catalog_sort_key(self, name: str):
        """Display order P_N > ... > P_1 > I1 > S: matches the pair tables."""
        name = self.resolve_name(name)
        if name.startswith("P"):
            return (0, self.nvert - int(name[1:]))
        if name == "I1":
            return (1, 0)
        return (2, int(name[1:]))

    def __eq__(self, other):
        return isinstance(other, Algebra) and other.nvert == self.nvert

    def __hash__(self):
        return hash(("Algebra", self.nvert))

    def __repr__(self):
        return f"Algebra(kA_{self.nvert}/rad^2)"


def build_linear_radsq(nvert: int) -> Algebra:
    return Algebra(nvert)


class Representation:
    """A finite-dimensional module: per-vertex dimensions, per-arrow matrices."""

    def __init__(self, algebra: Algebra, dims, maps=None):
        self.algebra = algebra
        self.dims = tuple(int(x) for x in dims)
        if len(self.dims) != algebra.nvert or any(x < 0 for x in self.dims):
            raise AlgebraError(f"bad dimension vector {self.dims} for {algebra!r}")
        if maps is None:
            maps = [linalg.zeros(self.dims[i + 1], self.dims[i]) for i in range(algebra.nvert - 1)]
        self.maps = tuple([[Fraction(x) for x in row] for row in mat] for mat in maps)
        if len(self.maps) != algebra.nvert - 1:
            raise AlgebraError("expected one matrix per arrow")
        for i, mat in enumerate(self.maps):
            if len(mat) != self.dims[i + 1] or any(len(row) != self.dims[i] for row in mat):
                raise AlgebraError(f"arrow {i + 1}->{i + 2} matrix has wrong shape")
        # rad^2 = 0: consecutive arrow actions compose to zero
        for i in range(algebra.nvert - 2):
            if self.dims[i] and self.dims[i + 1] and self.dims[i + 2]:
                if not linalg.is_zero(linalg.matmul(self.maps[i + 1], self.maps[i])):
                    raise AlgebraError(f"relation violated at arrows {i + 1}, {i + 2}")

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def to_json_dict(self) -> dict:
        return {
            "dims": list(self.dims),
            "arrows": [[[str(x) for x in row] for row in mat] for mat in self.maps],
        }

    @classmethod
    def from_json_dict(cls, algebra: Algebra, doc: dict) -> "Representation":
        maps = [[[Fraction(x) for x in row] for row in mat] for mat in doc["arrows"]]
        return cls(algebra, doc["dims"], maps)

    def __repr__(self):
        return f"Representation(dims={self.dims})"


def _thin_module(algebra: Algebra, dims: tuple[int, ...]) -> Representation:
    maps = []
    for i in range(algebra.nvert - 1):
        if dims[i] == 1 and dims[i + 1] == 1:
            maps.append([[Fraction(1)]])
        else:
            maps.append(linalg.zeros(dims[i + 1], dims[i]))
    return Representation(algebra, dims, maps)


def zero_module(algebra: Algebra) -> Representation:
    return Representation(algebra, (0,) * algebra.nvert)


def standard_module(algebra: Algebra, kind: str, i: int) -> Representation:
    """P(i), I(i) or S(i) as an explicit representation."""
    N = algebra.nvert
    if not 1 <= i <= N:
        raise AlgebraError(f"vertex {i} out of range 1..{N}")
    if kind == "projective":
        support = {i, i + 1} if i < N else {i}
    elif kind == "injective":
        support = {i - 1, i} if i > 1 else {i}
    elif kind == "simple":
        support = {i}
    else:
        raise AlgebraError(f"unknown module kind {kind!r}")
    return _thin_module(algebra, tuple(1 if v in support else 0 for v in range(1, N + 1)))


def direct_sum(algebra: Algebra, reps) -> Representation:
    reps = list(reps)
    if not reps:
        return zero_module(algebra)
    dims = tuple(sum(r.dims[v] for r in reps) for v in range(algebra.nvert))
    maps = []
    for a in range(algebra.nvert - 1):
        mat = linalg.zeros(dims[a + 1], dims[a])
        roff = coff = 0
        for r in reps:
            for rr in range(r.dims[a + 1]):
                for cc in range(r.dims[a]):
                    mat[roff + rr][coff + cc] = r.maps[a][rr][cc]
            roff += r.dims[a + 1]
            coff += r.dims[a]
        maps.append(mat)
    return Representation(algebra, dims, maps)


def sum_of_catalog(algebra: Algebra, names) -> Representation:
    return direct_sum(algebra, (algebra.catalog_module(nm) for nm in names))


class ModuleMap:
    """A homomorphism of representations: one matrix per vertex, commuting squares."""

    def __init__(self, source: Representation, target: Representation, blocks, check: bool = True):
        self.source = source
        self.target = target
        self.blocks = tuple([[Fraction(x) for x in row] for row in blk] for blk in blocks)
        if check:
            for v, blk in enumerate(self.blocks):
                if len(blk) != target.dims[v] or any(len(row) != source.dims[v] for row in blk):
                    raise AlgebraError(f"block at vertex {v + 1} has wrong shape")
            for a in range(source.algebra.nvert - 1):
                lhs = _safe_mul(self.blocks[a + 1], source.maps[a], target.dims[a + 1], source.dims[a])
                rhs = _safe_mul(target.maps[a], self.blocks[a], target.dims[a + 1], source.dims[a])
                if lhs != rhs:
                    raise AlgebraError(f"square at arrow {a + 1}->{a + 2} does not commute")

    def compose(self, other: "ModuleMap") -> "ModuleMap":
        """self after other."""
        blocks = [
            _safe_mul(self.blocks[v], other.blocks[v], self.target.dims[v], other.source.dims[v])
            for v in range(self.source.algebra.nvert)
        ]
        return ModuleMap(other.source, self.target, blocks, check=False)

    def is_isomorphism(self) -> bool:
        if self.source.dims != self.target.dims:
            return False
        return all(linalg.is_invertible(blk) if blk else True for blk in self.blocks)

    def vertex_rank(self, v: int) -> int:
        return linalg.rank(self.blocks[v])


def _safe_mul(a: Matrix, b: Matrix, rows: int, cols: int) -> Matrix:
    """a @ b with explicit output shape, tolerating zero-size factors."""
    if rows == 0 or cols == 0:
        return linalg.zeros(rows, cols)
    if not a or not a[0] or not b or not b[0]:
        return linalg.zeros(rows, cols)
    return linalg.matmul(a, b)


def hom_dim(M: Representation, N: Representation) -> int:
    """dim of the space of module maps M -> N, by exact rational rank."""
    if M.algebra != N.algebra:
        raise AlgebraError("representations live over different algebras")
    return len(hom_basis(M, N))


def hom_basis(M: Representation, N: Representation) -> list[ModuleMap]:
    """A basis of Hom(M, N), from the nullspace of the intertwining system."""
    if M.algebra != N.algebra:
        raise AlgebraError("representations live over different algebras")
    nverts = M.algebra.nvert
    offsets = []
    total = 0
    for v in range(nverts):
        offsets.append(total)
        total += M.dims[v] * N.dims[v]
    if total == 0:
        return []
    rows: list[list[Fraction]] = []
    for a in range(nverts - 1):
        # f_{a+1} @ M_a  ==  N_a @ f_a, entrywise
        for r in range(N.dims[a + 1]):
            for c in range(M.dims[a]):
                row = [Fraction(0)] * total
                for k in range(M.dims[a + 1]):
                    row[offsets[a + 1] + r * M.dims[a + 1] + k] += M.maps[a][k][c]
                for k in range(N.dims[a]):
                    row[offsets[a] + k * M.dims[a] + c] -= N.maps[a][r][k]
                if any(x != 0 for x in row):
                    rows.append(row)
    kernel = linalg.nullspace(rows, cols=total) if rows else linalg.nullspace([], cols=total)
    basis = []
    for vec in kernel:
        blocks = []
        for v in range(nverts):
            blk = [
                [vec[offsets[v] + r * M.dims[v] + c] for c in range(M.dims[v])]
                for r in range(N.dims[v])
            ]
            blocks.append(blk)
        basis.append(ModuleMap(M, N, blocks, check=False))
    return basis


# ---------------------------------------------------------------------------
# projective machinery


@dataclass
class ProjectiveTerm:
    """A direct sum of standard projectives with a fixed coordinate layout.

    At vertex v the coordinates are: generators of the P(v) summands (in
    summand order), then radical vectors of the P(v-1) summands.
    """

    algebra: Algebra
    verts: tuple[int, ...]
    rep: Representation = field(init=False)
    gen_coord: tuple[int, ...] = field(init=False)   # coordinate of each generator
    rad_coord: tuple[int | None, ...] = field(init=False)

    def __post_init__(self):
        N = self.algebra.nvert
        for v in self.verts:
            if not 1 <= v <= N:
                raise AlgebraError(f"projective vertex {v} out of range")
        gen_at = {v: [i for i, w in enumerate(self.verts) if w == v] for v in range(1, N + 1)}
        coord = {}
        dims = []
        for v in range(1, N + 1):
            pos = 0
            for i in gen_at[v]:
                coord[("g", i)] = pos
                pos += 1
            if v > 1:
                for i in gen_at[v - 1]:
                    if v - 1 < N:
                        coord[("r", i)] = pos
                        pos += 1
            dims.append(pos)
        maps = []
        for a in range(N - 1):
            v = a + 1
            mat = linalg.zeros(dims[a + 1], dims[a])
            for i in gen_at[v]:
                if v < N:
                    mat[coord[("r", i)]][coord[("g", i)]] = Fraction(1)
            maps.append(mat)
        self.rep = Representation(self.algebra, dims, maps)
        self.gen_coord = tuple(coord[("g", i)] for i in range(len(self.verts)))
        self.rad_coord = tuple(
            coord.get(("r", i)) if self.verts[i] < N else None for i in range(len(self.verts))
        )


def projective_cover(M: Representation) -> tuple[ProjectiveTerm, ModuleMap]:
    """The minimal projective cover P -> M (top-preserving, radical kernel)."""
    algebra = M.algebra
    N = algebra.nvert
    tops: dict[int, list[list[Fraction]]] = {}
    for v in range(1, N + 1):
        dim = M.dims[v - 1]
        if dim == 0:
            tops[v] = []
            continue
        rad_cols = linalg.columns(M.maps[v - 2]) if v >= 2 and M.dims[v - 2] else []
        chosen = []
        base = [c[:] for c in rad_cols]
        cur_rank = linalg.rank(linalg.from_columns(base, rows=dim)) if base else 0
        for j in range(dim):
            e = [Fraction(int(r == j)) for r in range(dim)]
            cand = base + chosen + [e]
            if linalg.rank(linalg.from_columns(cand, rows=dim)) > cur_rank + len(chosen):
                chosen.append(e)
        tops[v] = chosen
    verts = tuple(v for v in range(1, N + 1) for _ in tops[v])
    term = ProjectiveTerm(algebra, verts)
    blocks = [linalg.zeros(M.dims[v], term.rep.dims[v]) for v in range(N)]
    idx = 0
    for v in range(1, N + 1):
        for t in tops[v]:
            g = term.gen_coord[idx]
            for r in range(M.dims[v - 1]):
                blocks[v - 1][r][g] = t[r]
            if v < N and M.dims[v]:
                image = linalg.matmul(M.maps[v - 1], linalg.from_columns([t]))
                rc = term.rad_coord[idx]
                for r in range(M.dims[v]):
                    blocks[v][r][rc] = image[r][0]
            idx += 1
    return term, ModuleMap(term.rep, M, blocks)


def kernel_subrep(phi: ModuleMap) -> tuple[Representation, ModuleMap]:
    """Kernel of a module map, with its inclusion into the source."""
    algebra = phi.source.algebra
    N = algebra.nvert
    bases = []
    for v in range(N):
        if phi.source.dims[v] == 0:
            bases.append([])
        elif phi.target.dims[v] == 0:
            bases.append([[Fraction(int(i == j)) for i in range(phi.source.dims[v])]
                          for j in range(phi.source.dims[v])])
        else:
            bases.append(linalg.nullspace(phi.blocks[v], cols=phi.source.dims[v]))
    dims = tuple(len(b) for b in bases)
    maps = []
    for a in range(N - 1):
        if dims[a] == 0 or dims[a + 1] == 0:
            maps.append(linalg.zeros(dims[a + 1], dims[a]))
            continue
        img = linalg.matmul(phi.source.maps[a], linalg.from_columns(bases[a]))
        maps.append(linalg.solve(linalg.from_columns(bases[a + 1]), img))
    K = Representation(algebra, dims, maps)
    blocks = [
        linalg.from_columns(bases[v], rows=phi.source.dims[v]) if dims[v] else
        linalg.zeros(phi.source.dims[v], 0)
        for v in range(N)
    ]
    return K, ModuleMap(K, phi.source, blocks)


@dataclass
class Resolution:
    """The start of the minimal projective resolution P_len -> ... -> P_0 -> M."""

    module: Representation
    terms: list[ProjectiveTerm]
    differentials: list[ModuleMap]  # differentials[k]: terms[k+1] -> terms[k]
    augmentation: ModuleMap         # terms[0] -> module


def min_proj_resolution(M: Representation, length: int) -> Resolution:
    if length < 0:
        raise AlgebraError("resolution length must be >= 0")
    term0, phi = projective_cover(M)
    terms = [term0]
    diffs: list[ModuleMap] = []
    aug = phi
    current = phi
    for _ in range(length):
        kernel, incl = kernel_subrep(current)
        nxt, cover = projective_cover(kernel)
        terms.append(nxt)
        diffs.append(incl.compose(cover))
        current = cover
    return Resolution(M, terms, diffs, aug)


def is_radical_map(term_from: ProjectiveTerm, term_to: ProjectiveTerm, d: ModuleMap) -> bool:
    """True when the image lies in the radical: all generator rows vanish."""
    for i, v in enumerate(term_to.verts):
        row = term_to.gen_coord[i]
        blk = d.blocks[v - 1]
        if blk and any(x != 0 for x in blk[row]):
            return False
    return True


# ---------------------------------------------------------------------------
# Nakayama functor on projectives, and the higher translate


@dataclass
class InjectiveTerm:
    """Direct sum of standard injectives I(v), mirroring ProjectiveTerm's layout.

    At vertex v the coordinates are: socle vectors of the I(v) summands,
    then top vectors of the I(v+1) summands.
    """

    algebra: Algebra
    verts: tuple[int, ...]
    rep: Representation = field(init=False)
    soc_coord: tuple[int, ...] = field(init=False)
    top_coord: tuple[int | None, ...] = field(init=False)

    def __post_init__(self):
        N = self.algebra.nvert
        at = {v: [i for i, w in enumerate(self.verts) if w == v] for v in range(1, N + 2)}
        coord = {}
        dims = []
        for v in range(1, N + 1):
            pos = 0
            for i in at[v]:
                coord[("s", i)] = pos
                pos += 1
            for i in at[v + 1]:
                if self.verts[i] > 1:
                    coord[("t", i)] = pos
                    pos += 1
            dims.append(pos)
        maps = []
        for a in range(N - 1):
            mat = linalg.zeros(dims[a + 1], dims[a])
            for i in at[a + 2]:
                if self.verts[i] > 1:
                    mat[coord[("s", i)]][coord[("t", i)]] = Fraction(1)
            maps.append(mat)
        self.rep = Representation(self.algebra, dims, maps)
        self.soc_coord = tuple(coord[("s", i)] for i in range(len(self.verts)))
        self.top_coord = tuple(
            coord.get(("t", i)) if self.verts[i] > 1 else None for i in range(len(self.verts))
        )


def component_matrix(term_from: ProjectiveTerm, term_to: ProjectiveTerm, d: ModuleMap) -> list[list[Fraction]]:
    """Scalar components of a map between projective sums.

    Hom(P(i), P(j)) is at most one-dimensional, spanned by the identity
    (i = j) or by the generator-to-radical map (i = j + 1); entry [b][a]
    is the coefficient of that spanning map.
    """
    out = [[Fraction(0)] * len(term_from.verts) for _ in term_to.verts]
    for a, i in enumerate(term_from.verts):
        col = term_from.gen_coord[a]
        blk = d.blocks[i - 1]
        for b, j in enumerate(term_to.verts):
            if j == i:
                out[b][a] = blk[term_to.gen_coord[b]][col]
            elif j == i - 1 and term_to.rad_coord[b] is not None:
                out[b][a] = blk[term_to.rad_coord[b]][col]
    return out


def nakayama_projective(algebra: Algebra, i: int) -> Representation:
    """The Nakayama image of P(i), which is I(i)."""
    return standard_module(algebra, "injective", i)


def nakayama_map(term_from: ProjectiveTerm, term_to: ProjectiveTerm, d: ModuleMap) -> tuple[InjectiveTerm, InjectiveTerm, ModuleMap]:
    """Transport a map between projective sums through the Nakayama functor.

    The identity component of P(i) becomes the identity of I(i); the
    generator-to-radical component P(j+1) -> P(j) becomes the socle-to-top
    pairing I(j+1) -> I(j), supported at vertex j.
    """
    comp = component_matrix(term_from, term_to, d)
    src = InjectiveTerm(term_from.algebra, term_from.verts)
    tgt = InjectiveTerm(term_to.algebra, term_to.verts)
    N = term_from.algebra.nvert
    blocks = [linalg.zeros(tgt.rep.dims[v], src.rep.dims[v]) for v in range(N)]
    for a, i in enumerate(src.verts):
        for b, j in enumerate(tgt.verts):
            c = comp[b][a]
            if c == 0:
                continue
            if j == i:
                blocks[i - 1][tgt.soc_coord[b]][src.soc_coord[a]] += c
                if i > 1:
                    blocks[i - 2][tgt.top_coord[b]][src.top_coord[a]] += c
            elif j == i - 1:
                blocks[j - 1][tgt.soc_coord[b]][src.top_coord[a]] += c
    return src, tgt, ModuleMap(src.rep, tgt.rep, blocks)


def tau_d(M: Representation, d: int) -> Representation:
    """The higher translate: kernel of the Nakayama image of the d-th differential.

    Computes the minimal projective resolution to depth d, pushes its last
    differential P_d -> P_{d-1} through the Nakayama functor, and returns
    the kernel.  Projectives are sent to zero.
    """
    if d < 1:
        raise AlgebraError("translate degree must be >= 1")
    res = min_proj_resolution(M, d)
    last = res.differentials[d - 1]
    _, _, nu = nakayama_map(res.terms[d], res.terms[d - 1], last)
    kernel, _ = kernel_subrep(nu)
    return kernel


# ---------------------------------------------------------------------------
# Krull-Schmidt bookkeeping


def expected_decomposition(M: Representation) -> Counter:
    """Summand multiset predicted by arrow ranks (the fast invariant)."""
    algebra = M.algebra
    N = algebra.nvert
    ranks = [linalg.rank(mat) if M.dims[i] and M.dims[i + 1] else 0 for i, mat in enumerate(M.maps)]
    names: Counter = Counter()
    for i in range(1, N):
        if ranks[i - 1]:
            names[f"P{i}"] += ranks[i - 1]
    for v in range(1, N + 1):
        s = M.dims[v - 1]
        if v < N:
            s -= ranks[v - 1]
        if v > 1:
            s -= ranks[v - 2]
        if s < 0:
            raise AlgebraError("rank pattern inconsistent with rad^2 = 0")
        if s:
            if v == N:
                names[f"P{N}"] += s
            elif v == 1:
                names["I1"] += s
            else:
                names[f"S{v}"] += s
    return names


def decompose(M: Representation) -> Counter:
    """Multiset of catalog entries isomorphic to M, with an explicit certificate.

    The candidate multiset is read off the arrow ranks; the isomorphism is
    then exhibited by an invertible element of Hom(candidate, M), searched
    deterministically: single basis elements first, then the all-ones
    combination, then a bounded sweep of small integer combinations.
    Raises AlgebraError when no certificate is found.
    """
    names = expected_decomposition(M)
    ordered = sorted(names.elements(), key=M.algebra.catalog_sort_key)
    cand = sum_of_catalog(M.algebra, ordered)
    if cand.dims != M.dims:
        raise AlgebraError("candidate decomposition has wrong dimension vector")
    if M.is_zero():
        return names
    basis = hom_basis(cand, M)
    if _find_iso(cand, M, basis) is None:
        raise AlgebraError("no isomorphism certificate found; input is not a module "
                           "of this algebra class or the engine is inconsistent")
    return names


def _find_iso(src: Representation, tgt: Representation, basis: list[ModuleMap]):
    def combine(coeffs):
        blocks = []
        for v in range(src.algebra.nvert):
            blk = linalg.zeros(tgt.dims[v], src.dims[v])
            for c, bm in zip(coeffs, basis):
                if c == 0:
                    continue
                for r in range(tgt.dims[v]):
                    for cc in range(src.dims[v]):
                        blk[r][cc] += c * bm.blocks[v][r][cc]
            blocks.append(blk)
        return ModuleMap(src, tgt, blocks, check=False)

    k = len(basis)
    for j in range(k):
        f = combine([int(i == j) for i in range(k)])
        if f.is_isomorphism():
            return f
    f = combine([1] * k)
    if f.is_isomorphism():
        return f
    attempts = 0
    for coeffs in product(range(3), repeat=k):
        attempts += 1
        if attempts > 100_000:
            break
        f = combine(coeffs)
        if f.is_isomorphism():
            return f
    for t in range(2, 60):
        f = combine([Fraction(t) ** j for j in range(k)])
        if f.is_isomorphism():
            return f
    return None
