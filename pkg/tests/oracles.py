"""Independent brute-force oracles used to cross-check the engines.

These deliberately avoid the package's Groebner machinery and stable-hom
formula: the path enumerator works by naive subword avoidance on monomial
relation sets, and the stable-hom oracle spans all compositions through
each indecomposable projective.
"""

from quiverhom import Mat, hom_space, projective, rref
from quiverhom.algebras import Quiver


def naive_path_count(quiver: Quiver, monomial_relations, cap: int = 64) -> int:
    """Count paths avoiding the given forbidden words (traversal order).

    Only valid for monomial relation sets (each relation a single path),
    where the forbidden words are already a complete rewriting system.
    Raises if the count has not stabilized below the cap.
    """
    forbidden = [tuple(w) for w in monomial_relations]

    def ok(word):
        for f in forbidden:
            lf = len(f)
            for pos in range(len(word) - lf + 1):
                if word[pos:pos + lf] == f:
                    return False
        return True

    total = len(quiver.vertices)
    layer = [(ai,) for ai in range(len(quiver.arrows)) if ok((ai,))]
    length = 1
    while layer:
        if length >= cap:
            raise RuntimeError("path enumeration did not stabilize")
        total += len(layer)
        nxt = []
        for w in layer:
            t = quiver.arrow_target(w[-1])
            for ai in range(len(quiver.arrows)):
                if quiver.arrow_source(ai) == t:
                    w2 = w + (ai,)
                    if ok(w2):
                        nxt.append(w2)
        layer = nxt
        length += 1
    return total


def stable_hom_oracle(m, n) -> int:
    """dim Hom(m, n) minus the span of all factorizations through each
    indecomposable projective, computed by brute force."""
    homs = hom_space(m, n)
    if not homs:
        return 0
    a = m.algebra
    f = a.field
    composites = []
    for slot in range(a.n_prims):
        p = projective(a, slot)
        into = hom_space(m, p)
        outof = hom_space(p, n)
        for g in into:
            for h in outof:
                composites.append(h.mat @ g.mat)
    if not composites:
        return len(homs)
    flat = Mat.from_rows(f, [list(c.entries) for c in composites])
    return len(homs) - rref(flat).rank
