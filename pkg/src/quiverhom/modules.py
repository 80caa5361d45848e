"""Finite-dimensional left modules as action-matrix representations.

A module stores one square action matrix per algebra basis element and a
vertex label per coordinate (the Peirce grading: coordinate c belongs to
``e_i M`` where ``i = vertex_of[c]``).  Every construction in this package
keeps coordinates graded, which makes hom-space computations block-wise and
keeps all submodule/quotient bases adapted.
"""

from __future__ import annotations

from dataclasses import dataclass
from random import Random
from typing import Dict, List, Optional, Sequence, Tuple

from .algebras import Algebra, BuildError
from .exactla import (Field, Mat, column_space_basis, coordinates,
                      extend_to_basis, invert, kernel_basis, rank, rref,
                      require_big_field, solve)


class ModuleError(ValueError):
    pass


class Module:
    """A left module over a fixed algebra, with graded coordinates."""

    def __init__(self, algebra: Algebra, vertex_of: Sequence[int],
                 action: Sequence[Mat], validate: bool = True):
        self.algebra = algebra
        self.vertex_of = tuple(vertex_of)
        self.action = tuple(action)
        self._blocks: Optional[List[List[int]]] = None
        if len(self.action) != algebra.dim:
            raise ModuleError("need one action matrix per algebra basis element")
        n = len(self.vertex_of)
        for m in self.action:
            if m.rows != n or m.cols != n:
                raise ModuleError("action matrix has wrong shape")
            if m.field != algebra.field:
                raise ModuleError("action matrix over the wrong field")
        if validate:
            self.validate()

    # -- basic structure ----------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.vertex_of)

    @property
    def field(self) -> Field:
        return self.algebra.field

    def block(self, slot: int) -> List[int]:
        if self._blocks is None:
            self._blocks = [[] for _ in range(self.algebra.n_prims)]
            for c, v in enumerate(self.vertex_of):
                self._blocks[v].append(c)
        return self._blocks[slot]

    def peirce(self) -> Tuple[int, ...]:
        """Dimension of e_i M per prim slot."""
        return tuple(len(self.block(i)) for i in range(self.algebra.n_prims))

    def act_block(self, x: int, t: int, s: int) -> Mat:
        """The (t, s) block of the action of basis element ``x``."""
        return self.action[x].submatrix(self.block(t), self.block(s))

    def is_zero(self) -> bool:
        return self.dim == 0

    def validate(self) -> None:
        a = self.algebra
        f = self.field
        # prims act as the grading projectors, so the unit acts as identity
        for slot, p in enumerate(a.prims):
            m = self.action[p]
            for r in range(self.dim):
                for c in range(self.dim):
                    want = f.one if (r == c and self.vertex_of[r] == slot) else f.zero
                    if m.get(r, c) != want:
                        raise ModuleError(
                            f"prim {a.vertex_labels[slot]} does not act as the "
                            f"grading projector at ({r},{c})")
        for i in range(a.dim):
            for j in range(a.dim):
                prod = self.action[i] @ self.action[j]
                expect = Mat.zeros(f, self.dim, self.dim)
                for k, c in enumerate(a.mult[i][j]):
                    if c != 0:
                        expect = expect + self.action[k].scale(c)
                if prod != expect:
                    raise ModuleError(
                        f"action violates the multiplication table at "
                        f"({a.labels[i]}, {a.labels[j]})")

    def __repr__(self):
        return (f"Module(dim={self.dim}, peirce={self.peirce()} "
                f"over {self.algebra.name})")


@dataclass
class ModuleMap:
    """A linear map between modules over the same algebra."""

    source: Module
    target: Module
    mat: Mat

    def __post_init__(self):
        if self.source.algebra != self.target.algebra:
            raise ModuleError("module map across different algebras")
        if (self.mat.rows, self.mat.cols) != (self.target.dim, self.source.dim):
            raise ModuleError("module map matrix has wrong shape")

    def verify(self) -> bool:
        """Intertwining against every algebra basis element."""
        for x in range(self.source.algebra.dim):
            if self.target.action[x] @ self.mat != self.mat @ self.source.action[x]:
                return False
        return True

    def compose(self, earlier: "ModuleMap") -> "ModuleMap":
        """self after earlier (source of self = target of earlier)."""
        if earlier.target is not self.source and earlier.target.dim != self.source.dim:
            raise ModuleError("composition mismatch")
        return ModuleMap(earlier.source, self.target, self.mat @ earlier.mat)

    def is_zero(self) -> bool:
        return self.mat.is_zero()

    def is_iso(self) -> bool:
        return (self.source.dim == self.target.dim
                and rank(self.mat) == self.source.dim)


# ---------------------------------------------------------------------------
# Standard modules
# ---------------------------------------------------------------------------

def zero_module(a: Algebra) -> Module:
    return Module(a, (), [Mat.zeros(a.field, 0, 0)] * a.dim, validate=False)


def simple(a: Algebra, slot: int) -> Module:
    """S_i = (A e_i)/rad(A e_i): one-dimensional, radical acts by zero."""
    f = a.field
    action = []
    for b in range(a.dim):
        v = f.one if b == a.prims[slot] else f.zero
        action.append(Mat(f, 1, 1, [v]))
    return Module(a, (slot,), action)


def projective(a: Algebra, slot: int) -> Module:
    """P_i = A e_i, spanned by the basis elements with source slot i."""
    coords = [b for b in range(a.dim) if a.src[b] == slot]
    pos = {b: t for t, b in enumerate(coords)}
    f = a.field
    action = []
    for x in range(a.dim):
        m = Mat.zeros(f, len(coords), len(coords))
        for c, b in enumerate(coords):
            for k, val in enumerate(a.mult[x][b]):
                if val != 0:
                    m.set(pos[k], c, val)
        action.append(m)
    return Module(a, tuple(a.tgt[b] for b in coords), action)


def injective(a: Algebra, slot: int) -> Module:
    """I_i = D(e_i A): the right module e_i A dualized to a left module."""
    coords = [b for b in range(a.dim) if a.tgt[b] == slot]
    pos = {b: t for t, b in enumerate(coords)}
    f = a.field
    action = []
    for x in range(a.dim):
        right = Mat.zeros(f, len(coords), len(coords))
        for c, b in enumerate(coords):
            for k, val in enumerate(a.mult[b][x]):
                if val != 0:
                    right.set(pos[k], c, val)
        action.append(right.transpose())
    return Module(a, tuple(a.src[b] for b in coords), action)


def regular(a: Algebra) -> Module:
    """A as a left module over itself (= the sum of the projectives)."""
    action = [a.left_mult_matrix(x) for x in range(a.dim)]
    return Module(a, tuple(a.tgt[b] for b in range(a.dim)), action)


def standard_module(a: Algebra, kind: str, slot: int) -> Module:
    if kind == "simple":
        return simple(a, slot)
    if kind == "projective":
        return projective(a, slot)
    if kind == "injective":
        return injective(a, slot)
    raise ModuleError(f"unknown standard module kind {kind!r}")


def dual(m: Module) -> Module:
    """D(M) over the opposite algebra; same grading, transposed actions."""
    from .algebras import opposite
    op = opposite(m.algebra)
    return Module(op, m.vertex_of,
                  [m.action[x].transpose() for x in range(m.algebra.dim)])


# ---------------------------------------------------------------------------
# Hom spaces
# ---------------------------------------------------------------------------

def hom_space(m: Module, n: Module) -> List[ModuleMap]:
    """A basis of Hom(m, n) from the block-wise intertwining system."""
    if m.algebra != n.algebra:
        raise ModuleError("hom between modules over different algebras")
    a = m.algebra
    f = a.field
    nslots = a.n_prims
    mb = [m.block(i) for i in range(nslots)]
    nb = [n.block(i) for i in range(nslots)]
    # unknowns: per slot i a block f_i in n_i x m_i, flattened row-major
    offsets = []
    total = 0
    for i in range(nslots):
        offsets.append(total)
        total += len(nb[i]) * len(mb[i])
    if total == 0:
        return []

    rows: List[List] = []
    for r in a.radical:
        t, s = a.tgt[r], a.src[r]
        B = n.action[r].submatrix(nb[t], nb[s])   # n_t x n_s
        A = m.action[r].submatrix(mb[t], mb[s])   # m_t x m_s
        nt, ns = len(nb[t]), len(nb[s])
        mt, ms = len(mb[t]), len(mb[s])
        for alpha in range(nt):
            for beta in range(ms):
                row = [f.zero] * total
                for gamma in range(ns):
                    c = B.get(alpha, gamma)
                    if c != 0:
                        row[offsets[s] + gamma * ms + beta] = f.add(
                            row[offsets[s] + gamma * ms + beta], c)
                for delta in range(mt):
                    c = A.get(delta, beta)
                    if c != 0:
                        idx = offsets[t] + alpha * mt + delta
                        row[idx] = f.sub(row[idx], c)
                if any(v != 0 for v in row):
                    rows.append(row)

    if rows:
        system = Mat.from_rows(f, rows)
        ker = kernel_basis(system)
    else:
        ker = Mat.identity(f, total)

    maps: List[ModuleMap] = []
    for col in range(ker.cols):
        full = Mat.zeros(f, n.dim, m.dim)
        for i in range(nslots):
            mt, nt = len(mb[i]), len(nb[i])
            for r_loc in range(nt):
                for c_loc in range(mt):
                    v = ker.get(offsets[i] + r_loc * mt + c_loc, col)
                    if v != 0:
                        full.set(nb[i][r_loc], mb[i][c_loc], v)
        maps.append(ModuleMap(m, n, full))
    return maps


def hom_from_projective(a: Algebra, slot: int, n: Module) -> List[ModuleMap]:
    """Basis of Hom(P_i, n) by Yoneda: one map per basis vector of e_i n."""
    p = projective(a, slot)
    coords = [b for b in range(a.dim) if a.src[b] == slot]
    maps = []
    for c in n.block(slot):
        mat = Mat.zeros(a.field, n.dim, p.dim)
        for t, b in enumerate(coords):
            col = n.action[b].col(c)
            for r, v in enumerate(col):
                if v != 0:
                    mat.set(r, t, v)
        maps.append(ModuleMap(p, n, mat))
    return maps


# ---------------------------------------------------------------------------
# Sums, kernels, images, cokernels
# ---------------------------------------------------------------------------

def direct_sum(mods: Sequence[Module]) -> Module:
    if not mods:
        raise ModuleError("empty direct sum needs an algebra; use zero_module")
    a = mods[0].algebra
    f = a.field
    for m in mods[1:]:
        if m.algebra != a:
            raise ModuleError("direct sum across different algebras")
    vertex_of = tuple(v for m in mods for v in m.vertex_of)
    total = len(vertex_of)
    action = []
    for x in range(a.dim):
        big = Mat.zeros(f, total, total)
        off = 0
        for m in mods:
            mx = m.action[x]
            for r in range(m.dim):
                for c in range(m.dim):
                    v = mx.get(r, c)
                    if v != 0:
                        big.set(off + r, off + c, v)
            off += m.dim
        action.append(big)
    return Module(a, vertex_of, action, validate=False)


def direct_sum_with_maps(mods: Sequence[Module]):
    """Direct sum plus canonical inclusions and projections."""
    total_mod = direct_sum(mods)
    f = total_mod.field
    incls, projs = [], []
    off = 0
    for m in mods:
        inc = Mat.zeros(f, total_mod.dim, m.dim)
        prj = Mat.zeros(f, m.dim, total_mod.dim)
        for t in range(m.dim):
            inc.set(off + t, t, f.one)
            prj.set(t, off + t, f.one)
        incls.append(ModuleMap(m, total_mod, inc))
        projs.append(ModuleMap(total_mod, m, prj))
        off += m.dim
    return total_mod, incls, projs


def _submodule_from_block_bases(m: Module, bases: List[Mat]) -> Tuple[Module, ModuleMap]:
    """Module structure on an action-closed graded subspace.

    ``bases[i]`` has rows indexed by the block-i coordinates of ``m`` and
    columns forming a basis of the block-i part of the subspace.
    """
    a = m.algebra
    f = a.field
    nslots = a.n_prims
    vertex_of = []
    for i in range(nslots):
        vertex_of.extend([i] * bases[i].cols)
    sub_dim = len(vertex_of)
    incl = Mat.zeros(f, m.dim, sub_dim)
    col_off = []
    off = 0
    for i in range(nslots):
        col_off.append(off)
        blk = m.block(i)
        for c in range(bases[i].cols):
            for r_loc, r in enumerate(blk):
                v = bases[i].get(r_loc, c)
                if v != 0:
                    incl.set(r, off + c, v)
        off += bases[i].cols

    action = []
    for x in range(a.dim):
        t, s = a.tgt[x], a.src[x]
        mx = Mat.zeros(f, sub_dim, sub_dim)
        if bases[s].cols and bases[t].cols:
            moved = m.act_block(x, t, s) @ bases[s]
            coeff = coordinates(bases[t], moved)
            if coeff is None:
                raise ModuleError("subspace is not action-closed")
            for r in range(coeff.rows):
                for c in range(coeff.cols):
                    v = coeff.get(r, c)
                    if v != 0:
                        mx.set(col_off[t] + r, col_off[s] + c, v)
        action.append(mx)
    sub = Module(a, vertex_of, action, validate=False)
    return sub, ModuleMap(sub, m, incl)


def kernel_of(f_map: ModuleMap) -> Tuple[Module, ModuleMap]:
    """The kernel as a module plus its inclusion."""
    m, n = f_map.source, f_map.target
    bases = []
    for i in range(m.algebra.n_prims):
        blk_m, blk_n = m.block(i), n.block(i)
        fb = f_map.mat.submatrix(blk_n, blk_m)
        bases.append(kernel_basis(fb))
    return _submodule_from_block_bases(m, bases)


def image_of(f_map: ModuleMap) -> Tuple[Module, ModuleMap]:
    """The image as a submodule of the target plus its inclusion."""
    m, n = f_map.source, f_map.target
    bases = []
    for i in range(m.algebra.n_prims):
        blk_m, blk_n = m.block(i), n.block(i)
        fb = f_map.mat.submatrix(blk_n, blk_m)
        bases.append(column_space_basis(fb))
    return _submodule_from_block_bases(n, bases)


def cokernel_of(f_map: ModuleMap) -> Tuple[Module, ModuleMap]:
    """The cokernel as a module plus the projection from the target."""
    n = f_map.target
    a = n.algebra
    f = a.field
    nslots = a.n_prims
    proj_blocks: List[Mat] = []
    sect_blocks: List[Mat] = []
    vertex_of: List[int] = []
    for i in range(nslots):
        blk_n = n.block(i)
        blk_m = f_map.source.block(i)
        fb = f_map.mat.submatrix(blk_n, blk_m)
        im = column_space_basis(fb)
        comp_idx = extend_to_basis(f, im) if blk_n else []
        k = len(comp_idx)
        vertex_of.extend([i] * k)
        sect = Mat.zeros(f, len(blk_n), k)
        for c, idx in enumerate(comp_idx):
            sect.set(idx, c, f.one)
        combined = im.hstack(sect)
        inv = invert(combined)
        if inv is None:
            raise ModuleError("complement construction failed")
        proj = inv.submatrix(range(im.cols, im.cols + k), range(len(blk_n)))
        proj_blocks.append(proj)
        sect_blocks.append(sect)

    cok_dim = len(vertex_of)
    col_off = []
    off = 0
    for i in range(nslots):
        col_off.append(off)
        off += proj_blocks[i].rows

    proj_full = Mat.zeros(f, cok_dim, n.dim)
    for i in range(nslots):
        blk_n = n.block(i)
        pb = proj_blocks[i]
        for r in range(pb.rows):
            for c_loc, c in enumerate(blk_n):
                v = pb.get(r, c_loc)
                if v != 0:
                    proj_full.set(col_off[i] + r, c, v)

    action = []
    for x in range(a.dim):
        t, s = a.tgt[x], a.src[x]
        mx = Mat.zeros(f, cok_dim, cok_dim)
        if proj_blocks[s].rows and proj_blocks[t].rows:
            blockmap = proj_blocks[t] @ n.act_block(x, t, s) @ sect_blocks[s]
            for r in range(blockmap.rows):
                for c in range(blockmap.cols):
                    v = blockmap.get(r, c)
                    if v != 0:
                        mx.set(col_off[t] + r, col_off[s] + c, v)
        action.append(mx)
    cok = Module(a, vertex_of, action, validate=False)
    return cok, ModuleMap(n, cok, proj_full)


def is_short_exact(f: ModuleMap, g: ModuleMap) -> bool:
    """Whether 0 -> A -f-> B -g-> C -> 0 is exact (rank/nullity check)."""
    if f.target.dim != g.source.dim:
        return False
    return ((g.mat @ f.mat).is_zero()
            and rank(f.mat) == f.source.dim
            and rank(g.mat) == g.target.dim
            and f.source.dim + g.target.dim == f.target.dim)


# ---------------------------------------------------------------------------
# Radical, top, projective covers, syzygies
# ---------------------------------------------------------------------------

def radical_submodule(m: Module) -> Tuple[Module, ModuleMap]:
    """rad(A) . M with its inclusion."""
    a = m.algebra
    bases = []
    for i in range(a.n_prims):
        blk = m.block(i)
        cols: Optional[Mat] = None
        for r in a.radical:
            if a.tgt[r] != i:
                continue
            s = a.src[r]
            fb = m.act_block(r, i, s)
            cols = fb if cols is None else cols.hstack(fb)
        if cols is None:
            cols = Mat.zeros(a.field, len(blk), 0)
        bases.append(column_space_basis(cols))
    return _submodule_from_block_bases(m, bases)


def top_multiplicities(m: Module) -> Tuple[int, ...]:
    """Multiplicity of each simple in M/rad(A)M, per prim slot."""
    rad, _ = radical_submodule(m)
    return tuple(len(m.block(i)) - len(rad.block(i))
                 for i in range(m.algebra.n_prims))


def projective_cover(m: Module) -> ModuleMap:
    """The minimal projective cover P -> M (surjective, kernel in rad P)."""
    if m.is_zero():
        raise ModuleError("projective cover of the zero module")
    a = m.algebra
    f = a.field
    rad, rad_incl = radical_submodule(m)

    gens: List[Tuple[int, Mat]] = []  # (slot, generator vector in M)
    for i in range(a.n_prims):
        blk = m.block(i)
        rad_basis_i = Mat.zeros(f, len(blk), 0)
        # block-i columns of the radical inclusion
        rad_cols = [c for c in range(rad.dim) if rad.vertex_of[c] == i]
        if rad_cols:
            rad_basis_i = rad_incl.mat.submatrix(blk, rad_cols)
        comp_idx = extend_to_basis(f, rad_basis_i) if blk else []
        for idx in comp_idx:
            vec = Mat.zeros(f, m.dim, 1)
            vec.set(blk[idx], 0, f.one)
            gens.append((i, vec))

    summands = [projective(a, slot) for slot, _ in gens]
    if not summands:
        raise ModuleError("nonzero module equal to its own radical")
    cover_source = direct_sum(summands)

    cols: List[Mat] = []
    for slot, vec in gens:
        coords = [b for b in range(a.dim) if a.src[b] == slot]
        for b in coords:
            cols.append(m.action[b] @ vec)
    mat = Mat.zeros(f, m.dim, cover_source.dim)
    for j, col in enumerate(cols):
        for r in range(m.dim):
            v = col.get(r, 0)
            if v != 0:
                mat.set(r, j, v)
    cover = ModuleMap(cover_source, m, mat)
    if rank(mat) != m.dim:
        raise ModuleError("projective cover failed to be surjective")
    return cover


def syzygy(m: Module) -> Module:
    """The kernel of the projective cover (zero for projectives)."""
    if m.is_zero():
        return zero_module(m.algebra)
    ker, _ = kernel_of(projective_cover(m))
    return ker


# ---------------------------------------------------------------------------
# Isomorphism testing
# ---------------------------------------------------------------------------

@dataclass
class IsoVerdict:
    kind: str                      # "iso" | "not_iso" | "unknown"
    map: Optional[ModuleMap] = None
    witness: str = ""
    attempts: int = 0

    @property
    def is_iso(self) -> bool:
        return self.kind == "iso"

    @property
    def is_not_iso(self) -> bool:
        return self.kind == "not_iso"

    @property
    def is_unknown(self) -> bool:
        return self.kind == "unknown"


def is_isomorphic(m: Module, n: Module, attempts: int = 64,
                  rng: Optional[Random] = None, seed: int = 0) -> IsoVerdict:
    """Randomized isomorphism test with a verified certificate.

    A positive answer always carries an invertible intertwiner.  A negative
    answer requires a structural witness (Peirce vectors or hom-space
    dimensions); a failed random search only ever yields "unknown".
    """
    if m.algebra != n.algebra:
        raise ModuleError("isomorphism test across different algebras")
    if m.peirce() != n.peirce():
        return IsoVerdict("not_iso",
                          witness=f"peirce {m.peirce()} != {n.peirce()}")
    if m.dim == 0:
        return IsoVerdict("iso", ModuleMap(m, n, Mat.zeros(m.field, 0, 0)))

    hom_mn = hom_space(m, n)
    if not hom_mn:
        return IsoVerdict("not_iso", witness="Hom(m, n) = 0 with m nonzero")
    dims = {"mn": len(hom_mn), "nm": len(hom_space(n, m)),
            "mm": len(hom_space(m, m)), "nn": len(hom_space(n, n))}
    if len(set(dims.values())) != 1:
        return IsoVerdict(
            "not_iso",
            witness="hom-space dimensions obstruct: "
                    + ", ".join(f"{k}={v}" for k, v in sorted(dims.items())))

    require_big_field(m.field, "randomized isomorphism search")
    rng = rng if rng is not None else Random(seed)
    f = m.field
    for trial in range(attempts):
        mat = Mat.zeros(f, n.dim, m.dim)
        for h in hom_mn:
            c = f.random(rng)
            if c != 0:
                mat = mat + h.mat.scale(c)
        if rank(mat) == m.dim:
            return IsoVerdict("iso", ModuleMap(m, n, mat), attempts=trial + 1)
    return IsoVerdict("unknown", attempts=attempts)


def verify_iso_certificate(v: IsoVerdict) -> bool:
    """Re-check an Iso certificate: intertwining plus invertibility."""
    if not v.is_iso or v.map is None:
        return False
    return v.map.verify() and v.map.is_iso()


# ---------------------------------------------------------------------------
# Projective direct summands
# ---------------------------------------------------------------------------

@dataclass
class StripResult:
    stripped: Module
    summand_slots: Tuple[int, ...]   # one entry per split-off projective P_i


def strip_projectives(m: Module, rng: Optional[Random] = None, seed: int = 0,
                      attempts_per: int = 12) -> StripResult:
    """Split off projective direct summands found by a randomized search.

    Each split is verified on the spot (idempotent endomorphism, invertible
    composite), so under-stripping is possible but a wrong split is not.
    """
    if m.dim:
        require_big_field(m.field, "randomized projective splitting")
    rng = rng if rng is not None else Random(seed)
    a = m.algebra
    f = a.field
    current = m
    found: List[int] = []
    progress = True
    while progress and current.dim > 0:
        progress = False
        tops = top_multiplicities(current)
        for slot in range(a.n_prims):
            if tops[slot] == 0:
                continue
            p = projective(a, slot)
            if p.dim > current.dim:
                continue
            hom_pm = hom_from_projective(a, slot, current)
            hom_mp = hom_space(current, p)
            if not hom_pm or not hom_mp:
                continue
            split = _try_split(current, p, hom_pm, hom_mp, rng, attempts_per)
            if split is not None:
                current = split
                found.append(slot)
                progress = True
                break
    return StripResult(current, tuple(found))


def _try_split(m: Module, p: Module, hom_pm: List[ModuleMap],
               hom_mp: List[ModuleMap], rng: Random,
               attempts: int) -> Optional[Module]:
    f = m.field
    for _ in range(attempts):
        fmat = Mat.zeros(f, m.dim, p.dim)
        for h in hom_pm:
            c = f.random(rng)
            if c != 0:
                fmat = fmat + h.mat.scale(c)
        gmat = Mat.zeros(f, p.dim, m.dim)
        for h in hom_mp:
            c = f.random(rng)
            if c != 0:
                gmat = gmat + h.mat.scale(c)
        theta = gmat @ fmat
        theta_inv = invert(theta)
        if theta_inv is None:
            continue
        # idempotent projecting onto a summand isomorphic to p
        e = fmat @ theta_inv @ gmat
        if e @ e != e:
            raise ModuleError("split idempotent failed its own check")
        ker, _ = kernel_of(ModuleMap(m, m, e))
        if ker.dim + p.dim != m.dim:
            raise ModuleError("split dimensions are inconsistent")
        return ker
    return None


# ---------------------------------------------------------------------------
# Random modules (for property suites)
# ---------------------------------------------------------------------------

def random_module(a: Algebra, rng: Random, max_copies: int = 2) -> Module:
    """A random cokernel of a map between small projective sums."""
    slots = list(range(a.n_prims))
    src_list = [projective(a, s) for s in slots
                for _ in range(rng.randint(0, max_copies))]
    tgt_list = [projective(a, s) for s in slots
                for _ in range(rng.randint(0, max_copies))]
    if not tgt_list:
        return zero_module(a)
    target = direct_sum(tgt_list)
    if not src_list:
        return target
    source = direct_sum(src_list)
    basis = hom_space(source, target)
    f = a.field
    mat = Mat.zeros(f, target.dim, source.dim)
    for h in basis:
        c = f.random(rng)
        if c != 0:
            mat = mat + h.mat.scale(c)
    cok, _ = cokernel_of(ModuleMap(source, target, mat))
    return cok
