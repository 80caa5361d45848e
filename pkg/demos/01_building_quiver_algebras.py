"""Building finite-dimensional quiver algebras with relations.

A quiver is a directed graph; the path algebra has a basis of paths, and an
admissible set of relations cuts it down to finite dimension.  The
constructor completes the relations to a rewriting system (resolving all
overlaps), enumerates normal-form paths, and refuses to answer when the
degree bound cannot certify finiteness.

Run:  python demos/01_building_quiver_algebras.py
"""

from quiverhom import (BuildError, Idempotent, QQ, Quiver,
                       build_path_algebra, check_algebra, corner,
                       match_structure, opposite, parse_relation)
from quiverhom import fixtures

print(__doc__)

# The two-vertex algebra with a loop a at vertex 1, b: 1 -> 2, g: 2 -> 1,
# and relations a*a = g*b = b*a = 0.  Products are function-style: in p*q,
# the path q is traversed first.
a = fixtures.fix_A(QQ)
print(f"algebra A: dimension {a.dim}")
print(f"  basis: {', '.join(a.labels)}")
print(f"  primitive idempotents at basis indices {a.prims}")
print(f"  radical basis indices {a.radical}")

diag = check_algebra(a)
print("\ndiagnostics:")
for c in diag.checks:
    print(f"  [{'ok' if c.passed else 'FAIL'}] {c.name}"
          + (f" ({c.detail})" if c.detail else ""))

# Corner algebras: cutting by the idempotent at vertex 1 leaves the span of
# the paths that start and end there, i.e. {e1, a} with a*a = 0 -- the dual
# numbers.  The matcher certifies that with an explicit basis bijection.
e1 = Idempotent.from_vertex_names(a, ["1"])
cd = corner(a, e1)
dualnum = fixtures.fix_dualnum(QQ)
cert = match_structure(cd.algebra, dualnum)
print(f"\ncorner at vertex 1: dimension {cd.algebra.dim}, "
      f"basis {', '.join(cd.algebra.labels)}")
print(f"structure-constant match with the dual numbers: {cert}")

# The opposite algebra reverses multiplication; doing it twice restores the
# original structure constants exactly.
assert opposite(opposite(a)) == a
print("\nopposite(opposite(A)) == A: structure constants restored")

# A presentation that is not finite-dimensional is refused rather than
# silently truncated: the free loop algebra K[x].
try:
    build_path_algebra(QQ, fixtures.quiver_loop(), [], degree_bound=16)
except BuildError as exc:
    print(f"\nfree loop algebra rejected as expected: {exc}")

# Multi-term relations work too; completion resolves the overlaps.
q = Quiver(("1",), (("x", "1", "1"), ("y", "1", "1")))
rels = [parse_relation(q, QQ, t) for t in ("x*x", "y*y", "x*y - y*x")]
comm = build_path_algebra(QQ, q, rels, name="commuting-square-zero")
print(f"\ntwo commuting square-zero loops: dimension {comm.dim}, "
      f"basis {', '.join(comm.labels)}")
