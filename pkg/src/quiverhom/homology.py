"""Minimal projective resolutions and tri-state homological dimensions.

Projective dimension is not decidable by bounded search alone, so verdicts
are tri-state: ``Finite(n)`` comes from an exactly computed zero syzygy,
``InfiniteCertified`` carries a re-verifiable isomorphism between two
(projective-summand-stripped) syzygies at different stages, and ``Unknown``
is the honest answer when the bound is exhausted.  Both positive verdicts
are sound even if the randomized summand stripping misses a summand.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from random import Random
from typing import List, Optional, Sequence, Tuple

from .algebras import Algebra, opposite
from .exactla import Mat, rref
from .modules import (Module, ModuleMap, StripResult, dual, hom_space,
                      is_isomorphic, kernel_of, projective_cover, regular,
                      simple, strip_projectives, zero_module)


class ConsistencyError(RuntimeError):
    """An internal cross-check failed (e.g. the two-sided dimensions of a
    Gorenstein algebra disagreeing); this is a bug or corrupted input, never
    a normal verdict."""


# ---------------------------------------------------------------------------
# Dimension results
# ---------------------------------------------------------------------------

@dataclass
class DimResult:
    kind: str                       # "finite" | "infinite" | "unknown"
    value: Optional[int] = None     # finite: the dimension
    j: Optional[int] = None         # infinite: stage indices j < k with
    k: Optional[int] = None         #   stripped syzygies isomorphic
    iso: Optional[ModuleMap] = None
    omega_j: Optional[Module] = None
    omega_k: Optional[Module] = None
    bound: Optional[int] = None     # unknown: the exhausted bound

    @property
    def is_finite(self) -> bool:
        return self.kind == "finite"

    @property
    def is_infinite(self) -> bool:
        return self.kind == "infinite"

    @property
    def is_unknown(self) -> bool:
        return self.kind == "unknown"

    def verify_certificate(self) -> bool:
        """Re-verify an InfiniteCertified verdict's isomorphism."""
        if not self.is_infinite:
            return True
        if self.iso is None or self.omega_j is None or self.omega_k is None:
            return False
        if self.omega_j.is_zero() or self.j is None or self.k is None:
            return False
        if not (0 <= self.j < self.k):
            return False
        return self.iso.verify() and self.iso.is_iso()

    def describe(self) -> str:
        if self.is_finite:
            return f"Finite({self.value})"
        if self.is_infinite:
            return f"InfiniteCertified(omega^{self.k} ~ omega^{self.j})"
        return f"Unknown(bound={self.bound})"

    def __eq__(self, other):
        """Verdict equality: same kind, and same value when finite."""
        if not isinstance(other, DimResult):
            return NotImplemented
        if self.kind != other.kind:
            return False
        if self.kind == "finite":
            return self.value == other.value
        return True


# ---------------------------------------------------------------------------
# Resolutions
# ---------------------------------------------------------------------------

@dataclass
class ResolutionStage:
    stripped: Module                    # S_t: Omega^t with summands removed
    stripped_slots: Tuple[int, ...]     # projective summands split off
    cover: Optional[ModuleMap] = None   # P_t -> S_t (None when S_t = 0)
    kernel: Optional[Module] = None     # Omega(S_t), unstripped
    kernel_incl: Optional[ModuleMap] = None


@dataclass
class Resolution:
    module: Module
    stages: List[ResolutionStage] = dc_field(default_factory=list)
    bound: int = 0
    terminated: bool = False

    @property
    def syzygies(self) -> List[Module]:
        return [s.stripped for s in self.stages]

    @property
    def finite_length(self) -> Optional[int]:
        """Index of the first zero stripped syzygy, if reached."""
        for t, s in enumerate(self.stages):
            if s.stripped.is_zero():
                return t
        return None


def _step(m: Module, rng: Random) -> ResolutionStage:
    """Strip projective summands, then take a minimal cover and its kernel."""
    sr: StripResult = strip_projectives(m, rng=rng)
    stage = ResolutionStage(sr.stripped, sr.summand_slots)
    if stage.stripped.is_zero():
        return stage
    stage.cover = projective_cover(stage.stripped)
    ker, incl = kernel_of(stage.cover)
    stage.kernel = ker
    stage.kernel_incl = incl
    return stage


def resolve(m: Module, bound: int = 20, seed: int = 0) -> Resolution:
    """Minimal projective resolution prefix (stops at zero syzygy or bound)."""
    if bound < 1:
        raise ValueError("resolution bound must be >= 1")
    rng = Random(seed)
    res = Resolution(m, bound=bound)
    current = m
    for _ in range(bound + 1):
        stage = _step(current, rng)
        res.stages.append(stage)
        if stage.stripped.is_zero():
            res.terminated = True
            return res
        current = stage.kernel
        if len(res.stages) > bound:
            return res
    return res


def proj_dim(m: Module, bound: int = 20, seed: int = 0) -> DimResult:
    """Tri-state projective dimension with certificates.

    Finite(n): the n-th stripped syzygy is nonzero and its syzygy vanishes
    (exact computation).  InfiniteCertified: some later stripped syzygy is
    verified isomorphic to an earlier nonzero one, which forces the syzygies
    to repeat forever.  Unknown otherwise.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    if m.is_zero():
        return DimResult("finite", value=0)
    rng = Random(seed)
    chain: List[Module] = []
    stage = _step(m, rng)
    if stage.stripped.is_zero():
        return DimResult("finite", value=0)
    chain.append(stage.stripped)
    t = 0
    while t < bound:
        ker = stage.kernel
        assert ker is not None
        if ker.is_zero():
            return DimResult("finite", value=t)
        stage = _step(ker, rng)
        new = stage.stripped
        if new.is_zero():
            # the kernel consisted entirely of certified projective summands
            return DimResult("finite", value=t + 1)
        for j, old in enumerate(chain):
            verdict = is_isomorphic(old, new, rng=rng)
            if verdict.is_iso:
                return DimResult("infinite", j=j, k=len(chain),
                                 iso=verdict.map, omega_j=old, omega_k=new)
        chain.append(new)
        t += 1
    return DimResult("unknown", bound=bound)


def inj_dim(m: Module, bound: int = 20, seed: int = 0) -> DimResult:
    """Injective dimension, computed as proj_dim of the dual over A^op."""
    return proj_dim(dual(m), bound=bound, seed=seed)


# ---------------------------------------------------------------------------
# Ext groups
# ---------------------------------------------------------------------------

def _flat_rank(f, mats: Sequence[Mat]) -> int:
    if not mats:
        return 0
    rows = [list(m.entries) for m in mats]
    return rref(Mat.from_rows(f, rows)).rank


def ext_dim(m: Module, n: Module, i: int, bound: int = 20,
            seed: int = 0) -> Optional[int]:
    """dim Ext^i(m, n), or None when the bound precludes an answer.

    For i >= 1, equals dim Hom(Omega^i m, n) minus the dimension of the maps
    extending to the (i-1)-st cover; the factoring space is computed
    explicitly rather than assuming radical differentials.
    """
    if m.algebra != n.algebra:
        raise ValueError("ext between modules over different algebras")
    if i < 0:
        raise ValueError("negative ext degree")
    if i == 0:
        return len(hom_space(m, n))
    if i > bound:
        return None
    if m.is_zero() or n.is_zero():
        return 0
    rng = Random(seed)
    stage = _step(m, rng)
    for _t in range(i - 1):
        if stage.stripped.is_zero():
            return 0
        stage = _step(stage.kernel, rng)
    if stage.stripped.is_zero():
        return 0
    ker = stage.kernel
    incl = stage.kernel_incl
    assert ker is not None and incl is not None
    if ker.is_zero():
        return 0
    hom_k = hom_space(ker, n)
    if not hom_k:
        return 0
    hom_p = hom_space(stage.cover.source, n)
    restricted = [h.mat @ incl.mat for h in hom_p]
    return len(hom_k) - _flat_rank(m.field, restricted)


# ---------------------------------------------------------------------------
# Gorenstein verdicts
# ---------------------------------------------------------------------------

@dataclass
class GorensteinVerdict:
    kind: str                        # "gorenstein" | "not_gorenstein" | "unknown"
    left: DimResult = None           # inj.dim of the left regular module
    right: DimResult = None          # inj.dim of the right regular module
    gdim: Optional[int] = None
    witness_side: Optional[str] = None

    @property
    def is_gorenstein(self) -> bool:
        return self.kind == "gorenstein"

    def describe(self) -> str:
        if self.kind == "gorenstein":
            return f"Gorenstein(G.dim={self.gdim})"
        if self.kind == "not_gorenstein":
            return f"NotGorenstein(witness: {self.witness_side} side)"
        return "Unknown"


def gorenstein(a: Algebra, bound: int = 20, seed: int = 0) -> GorensteinVerdict:
    """Finite injective dimension of the regular module on both sides.

    The two sides must agree whenever both are finite; disagreement raises
    ConsistencyError (it would contradict the left/right symmetry of the
    common value and therefore indicates a bug).
    """
    left = proj_dim(dual(regular(a)), bound=bound, seed=seed)
    aop = opposite(a)
    right = proj_dim(dual(regular(aop)), bound=bound, seed=seed)
    if left.is_infinite or right.is_infinite:
        side = "left" if left.is_infinite else "right"
        return GorensteinVerdict("not_gorenstein", left, right,
                                 witness_side=side)
    if left.is_finite and right.is_finite:
        if left.value != right.value:
            raise ConsistencyError(
                f"two-sided injective dimensions disagree: left "
                f"{left.value}, right {right.value} for {a.name}")
        return GorensteinVerdict("gorenstein", left, right, gdim=left.value)
    return GorensteinVerdict("unknown", left, right)


# ---------------------------------------------------------------------------
# Global dimension (both-sided regularity)
# ---------------------------------------------------------------------------

@dataclass
class GlobalDimResult:
    kind: str                     # "finite" | "infinite" | "unknown"
    value: Optional[int] = None
    witness_slot: Optional[int] = None
    witness: Optional[DimResult] = None

    def describe(self) -> str:
        if self.kind == "finite":
            return f"Finite({self.value})"
        if self.kind == "infinite":
            return f"Infinite(simple #{self.witness_slot})"
        return "Unknown"


def global_dimension(a: Algebra, bound: int = 20, seed: int = 0) -> GlobalDimResult:
    """Max projective dimension over the simple modules (tri-state)."""
    worst = -1
    for slot in range(a.n_prims):
        r = proj_dim(simple(a, slot), bound=bound, seed=seed)
        if r.is_infinite:
            return GlobalDimResult("infinite", witness_slot=slot, witness=r)
        if r.is_unknown:
            return GlobalDimResult("unknown")
        worst = max(worst, r.value)
    return GlobalDimResult("finite", value=worst)


def is_regular(a: Algebra, bound: int = 20, seed: int = 0) -> Tuple[str, dict]:
    """Finite global dimension on both sides, tri-state.

    Returns ("yes"/"no"/"unknown", detail dict with the two results).
    """
    left = global_dimension(a, bound, seed)
    right = global_dimension(opposite(a), bound, seed)
    detail = {"left": left, "right": right}
    if left.kind == "infinite" or right.kind == "infinite":
        return "no", detail
    if left.kind == "finite" and right.kind == "finite":
        return "yes", detail
    return "unknown", detail


# ---------------------------------------------------------------------------
# MCM membership and stable Hom
# ---------------------------------------------------------------------------

@dataclass
class McmVerdict:
    kind: str                      # "yes" | "no" | "unknown"
    witness_degree: Optional[int] = None
    witness_ext: Optional[int] = None
    checked_through: int = 0
    certified: bool = False

    def describe(self) -> str:
        if self.kind == "yes":
            tag = "certified" if self.certified else "up to bound"
            return f"MCM ({tag}, Ext^i(M,A)=0 for 1<=i<={self.checked_through})"
        if self.kind == "no":
            return (f"not MCM (Ext^{self.witness_degree}(M,A) has dim "
                    f"{self.witness_ext})")
        return "unknown"


def is_mcm(m: Module, bound: int = 20, seed: int = 0,
           gverdict: Optional[GorensteinVerdict] = None) -> McmVerdict:
    """Ext^i(M, A) = 0 for all i >= 1; certified over a Gorenstein algebra.

    When the algebra is Gorenstein of dimension d, vanishing for i <= d
    certifies vanishing for all i (Ext^i(-, A) dies past the injective
    dimension of A), so the answer is exact; otherwise only the range up to
    the bound is checked and a clean sweep stays "unknown".
    """
    a = m.algebra
    reg = regular(a)
    if gverdict is None:
        gverdict = gorenstein(a, bound=bound, seed=seed)
    if gverdict.is_gorenstein:
        d = gverdict.gdim
        for i in range(1, d + 1):
            e = ext_dim(m, reg, i, bound=max(bound, d), seed=seed)
            if e is None:
                return McmVerdict("unknown", checked_through=i - 1)
            if e != 0:
                return McmVerdict("no", witness_degree=i, witness_ext=e,
                                  checked_through=i)
        return McmVerdict("yes", checked_through=d, certified=True)
    for i in range(1, bound + 1):
        e = ext_dim(m, reg, i, bound=bound, seed=seed)
        if e is None:
            return McmVerdict("unknown", checked_through=i - 1)
        if e != 0:
            return McmVerdict("no", witness_degree=i, witness_ext=e,
                              checked_through=i)
    return McmVerdict("unknown", checked_through=bound)


def stable_hom_dim(m: Module, n: Module) -> int:
    """dim of Hom(m, n) modulo maps factoring through a projective.

    Maps factoring through any projective factor through the cover of n, so
    the factoring subspace is the image of composition with the cover.
    """
    if m.algebra != n.algebra:
        raise ValueError("stable hom between modules over different algebras")
    if m.is_zero() or n.is_zero():
        return 0
    homs = hom_space(m, n)
    if not homs:
        return 0
    cover = projective_cover(n)
    lifts = hom_space(m, cover.source)
    factored = [cover.mat @ h.mat for h in lifts]
    return len(homs) - _flat_rank(m.field, factored)


def is_injective_module(n: Module, seed: int = 0) -> bool:
    """Injectivity probe: Ext^1(S_i, n) = 0 for every simple (certified)."""
    a = n.algebra
    for slot in range(a.n_prims):
        e = ext_dim(simple(a, slot), n, 1, bound=1, seed=seed)
        if e is None or e != 0:
            return False
    return True


def is_self_injective(a: Algebra, seed: int = 0) -> bool:
    return is_injective_module(regular(a), seed=seed)
