"""Minimal resolutions and tri-state projective dimensions.

Projective dimension over a finite-dimensional algebra is not decidable by
bounded search alone, so every verdict here is one of three things:
Finite(n) backed by an exactly computed zero syzygy, InfiniteCertified
backed by a verified isomorphism between two syzygies (periodicity forces
infinitude), or an honest Unknown at the bound.

Run:  python demos/02_resolutions_and_dimensions.py
"""

from quiverhom import (QQ, dual, ext_dim, gorenstein, inj_dim, injective,
                       is_isomorphic, proj_dim, projective, regular, resolve,
                       simple, stable_hom_dim, syzygy)
from quiverhom import fixtures

print(__doc__)

a = fixtures.fix_A(QQ)
s1, s2 = simple(a, 0), simple(a, 1)

print("over the two-vertex algebra A:")
print(f"  pd S_2 = {proj_dim(s2).describe()}   "
      "(its syzygy is the projective at vertex 1)")

r = proj_dim(s1)
print(f"  pd S_1 = {r.describe()}")
print(f"    certificate: stripped syzygies at stages {r.j} and {r.k} are "
      f"isomorphic, re-verified: {r.verify_certificate()}")

i2 = injective(a, 1)
print(f"  pd I(2) = {proj_dim(i2).describe()}   "
      "(the first syzygy of the injective hull of S_2 is S_1)")

res = resolve(s1, bound=4)
print(f"  resolution prefix of S_1: stripped syzygy dims "
      f"{[m.dim for m in res.syzygies]}")

# Injective dimension is the projective dimension of the dual over the
# opposite algebra.
d = fixtures.fix_dualnum(QQ)
print("\nover the dual numbers:")
print(f"  inj.dim of the regular module = {inj_dim(regular(d)).describe()} "
      "(self-injective)")
s = simple(d, 0)
print(f"  the simple is syzygy-periodic: Omega S ~ S is "
      f"{is_isomorphic(syzygy(s), s).kind}")
print(f"  Ext^i(S, S) for i = 0..5: {[ext_dim(s, s, i) for i in range(6)]}")
print(f"  stable Hom(S, S) has dimension {stable_hom_dim(s, s)}; "
      f"stable Hom(P, S) = {stable_hom_dim(projective(d, 0), s)}")

# Gorenstein verdicts: both one-sided injective dimensions of the regular
# module, with the two-sided agreement asserted whenever both are finite.
print("\nGorenstein verdicts:")
for build in (fixtures.fix_K, fixtures.fix_dualnum, fixtures.fix_A,
              fixtures.fix_Adoubleprime):
    alg = build(QQ)
    print(f"  {alg.name:14s} {gorenstein(alg).describe()}")
