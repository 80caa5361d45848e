"""Programmatic builders for the worked-example algebras and decompositions.

All builders take a field descriptor so the whole corpus runs over the
rationals and over prime fields alike.  The same presentations are shipped
as text files under ``fixtures/``; these builders are the in-memory source
used by tests and demos.
"""

from __future__ import annotations

from typing import Tuple

from .algebras import (Algebra, Quiver, build_path_algebra, parse_relation)
from .exactla import Field, Mat
from .triangular import Bimodule, TriangularData, build_triangular


def _build(field: Field, quiver: Quiver, relation_texts, name: str) -> Algebra:
    rels = [parse_relation(quiver, field, t) for t in relation_texts]
    return build_path_algebra(field, quiver, rels, name=name)


def quiver_point() -> Quiver:
    return Quiver(("1",), ())


def fix_K(field: Field) -> Algebra:
    """The base field as a one-vertex quiver algebra."""
    return _build(field, quiver_point(), [], "K")


def quiver_loop() -> Quiver:
    return Quiver(("1",), (("x", "1", "1"),))


def fix_dualnum(field: Field) -> Algebra:
    """The dual numbers: one loop x with x*x = 0."""
    return _build(field, quiver_loop(), ["x*x"], "dualnum")


def quiver_A() -> Quiver:
    return Quiver(("1", "2"),
                  (("a", "1", "1"), ("b", "1", "2"), ("g", "2", "1")))


def fix_A(field: Field) -> Algebra:
    """Two vertices, loop a at 1, b: 1 -> 2, g: 2 -> 1; a*a = g*b = b*a = 0."""
    return _build(field, quiver_A(), ["a*a", "g*b", "b*a"], "A")


def quiver_Aprime() -> Quiver:
    return Quiver(("1", "2"), (("a", "1", "1"), ("b", "1", "2")))


def fix_Aprime(field: Field) -> Algebra:
    """Loop a at 1 and b: 1 -> 2 with a*a = b*a = 0 (dimension 4)."""
    return _build(field, quiver_Aprime(), ["a*a", "b*a"], "Aprime")


def quiver_Adoubleprime() -> Quiver:
    return Quiver(("1", "2"),
                  (("a", "1", "1"), ("b", "2", "1"), ("c", "2", "1")))


def fix_Adoubleprime(field: Field) -> Algebra:
    """Loop a at 1 and two arrows b, c: 2 -> 1 with a*a = 0 (dimension 7)."""
    return _build(field, quiver_Adoubleprime(), ["a*a"], "Adoubleprime")


# ---------------------------------------------------------------------------
# Triangular decompositions of the examples
# ---------------------------------------------------------------------------

def aprime_bimodule(field: Field) -> Tuple[Algebra, Algebra, Bimodule]:
    """(R, S, M) with R = K, S = dual numbers, M one-dimensional.

    The right radical action is trivial, so M is the simple right module
    over the dual numbers; the upper triangular algebra on this data is the
    four-dimensional fixture.
    """
    r = fix_K(field)
    s = fix_dualnum(field)
    one = Mat.identity(field, 1)
    zero = Mat.zeros(field, 1, 1)
    left_action = [one]            # the unit of K
    right_action = [one, zero]     # unit of dualnum, then x acting by zero
    m = Bimodule(r, s, (0,), (0,), left_action, right_action)
    return r, s, m


def aprime_triangular(field: Field) -> TriangularData:
    r, s, m = aprime_bimodule(field)
    return build_triangular(r, s, m, "upper", name="upper(K,M,dualnum)")


def adoubleprime_bimodule(field: Field) -> Tuple[Algebra, Algebra, Bimodule]:
    """(R, S, M) with R = dual numbers, S = K, M free of rank 2 on the left.

    Coordinates are (b, c, x*b, x*c); x sends the first pair to the second
    and kills it.  The lower triangular algebra on this data is the
    seven-dimensional fixture.
    """
    r = fix_dualnum(field)
    s = fix_K(field)
    f = field
    e4 = Mat.identity(f, 4)
    x_act = Mat.zeros(f, 4, 4)
    x_act.set(2, 0, f.one)
    x_act.set(3, 1, f.one)
    left_action = [e4, x_act]      # dualnum basis order: e, x
    right_action = [e4]            # unit of K
    m = Bimodule(r, s, (0, 0, 0, 0), (0, 0, 0, 0), left_action, right_action)
    return r, s, m


def adoubleprime_triangular(field: Field) -> TriangularData:
    r, s, m = adoubleprime_bimodule(field)
    return build_triangular(r, s, m, "lower", name="lower(K,N,dualnum)")


ALL_FIXTURES = {
    "K": fix_K,
    "dualnum": fix_dualnum,
    "A": fix_A,
    "Aprime": fix_Aprime,
    "Adoubleprime": fix_Adoubleprime,
}
