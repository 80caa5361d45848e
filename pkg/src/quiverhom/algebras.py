"""Finite-dimensional quiver algebras with relations.

The constructor runs a Buchberger-style completion on path overlaps under the
length-then-lexicographic word order, truncated at a degree bound, and then
enumerates normal-form paths.  The resulting algebras carry a *pointed*
basis: every basis element b satisfies ``e_t * b * e_s = b`` for a unique
pair of primitive idempotents, and the basis splits as primitives plus a
radical basis.  All derived constructions (opposite, corner, triangular
blocks) preserve this shape, which keeps Peirce decompositions trivial.

Composition convention: in the product ``p*q`` the path ``q`` is traversed
first, then ``p`` (function-style).  Internally a word stores its arrows in
traversal order, so the displayed label of a word ``(q, p)`` is ``"p*q"``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from .exactla import Field, Mat, Scalar, column_space_basis


class BuildError(ValueError):
    """Raised when an algebra cannot be constructed as specified."""


# ---------------------------------------------------------------------------
# Quivers, words, relations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Quiver:
    """Vertices and named arrows; names must be unique."""

    vertices: Tuple[str, ...]
    arrows: Tuple[Tuple[str, str, str], ...]  # (name, source, target)

    def __post_init__(self):
        names = [a[0] for a in self.arrows]
        if len(set(self.vertices)) != len(self.vertices):
            raise BuildError("duplicate vertex names")
        if len(set(names)) != len(names) or set(names) & set(self.vertices):
            raise BuildError("arrow names must be unique and distinct from vertices")
        for name, src, tgt in self.arrows:
            if src not in self.vertices or tgt not in self.vertices:
                raise BuildError(f"arrow {name}: undeclared endpoint")

    def vertex_index(self, name: str) -> int:
        return self.vertices.index(name)

    def arrow_index(self, name: str) -> int:
        for i, a in enumerate(self.arrows):
            if a[0] == name:
                return i
        raise BuildError(f"unknown arrow name: {name!r}")

    def arrow_source(self, i: int) -> int:
        return self.vertex_index(self.arrows[i][1])

    def arrow_target(self, i: int) -> int:
        return self.vertex_index(self.arrows[i][2])


Word = Tuple[int, ...]  # arrow indices in traversal order


def word_source(q: Quiver, w: Word) -> int:
    return q.arrow_source(w[0])


def word_target(q: Quiver, w: Word) -> int:
    return q.arrow_target(w[-1])


def word_composable(q: Quiver, w: Word) -> bool:
    return all(q.arrow_target(w[i]) == q.arrow_source(w[i + 1])
               for i in range(len(w) - 1))


def compose_words(q: Quiver, first: Word, then: Word) -> Optional[Word]:
    """Traversal-order concatenation ``first`` then ``then`` (or None)."""
    if not first:
        return then
    if not then:
        return first
    if q.arrow_target(first[-1]) != q.arrow_source(then[0]):
        return None
    return first + then


def word_label(q: Quiver, w: Word) -> str:
    """Display in product order: last-traversed factor leftmost."""
    return "*".join(q.arrows[i][0] for i in reversed(w))


def _word_key(w: Word):
    return (len(w), w)


@dataclass(frozen=True)
class Relation:
    """A formal combination of parallel paths, each of length >= 2."""

    quiver: Quiver
    terms: Tuple[Tuple[Word, Scalar], ...]
    display: str = ""

    def validate(self) -> None:
        if not self.terms:
            raise BuildError("empty relation")
        q = self.quiver
        src = tgt = None
        for w, c in self.terms:
            if len(w) < 2:
                raise BuildError(
                    f"relation {self.display or word_label(q, w)!r} is not "
                    f"admissible: word of length {len(w)}")
            if not word_composable(q, w):
                raise BuildError(
                    f"relation {self.display!r}: non-composable word "
                    f"{word_label(q, w)!r}")
            s, t = word_source(q, w), word_target(q, w)
            if src is None:
                src, tgt = s, t
            elif (s, t) != (src, tgt):
                raise BuildError(
                    f"relation {self.display!r}: words are not parallel")
            if c == 0:
                raise BuildError(f"relation {self.display!r}: zero coefficient")


def parse_word(quiver: Quiver, text: str) -> Word:
    """A product-order word like ``"a*g"`` (g traversed first) to traversal order."""
    names = [tok.strip() for tok in text.split("*") if tok.strip()]
    if not names:
        raise BuildError(f"empty path word in {text!r}")
    idx = tuple(quiver.arrow_index(nm) for nm in reversed(names))
    if not word_composable(quiver, idx):
        raise BuildError(f"word {text!r} is not composable under the "
                         "function-style convention")
    return idx


def parse_relation(quiver: Quiver, field: Field, text: str) -> Relation:
    """A signed sum of path words, e.g. ``"g*b - 2*a*g"`` or ``"a*a"``.

    Coefficients are integers or ``num/den`` strings; a missing coefficient
    means 1.  Arrow names start with a letter.
    """
    import re
    s = text.replace(" ", "")
    if not s:
        raise BuildError("empty relation")
    # split into signed terms
    terms: List[Tuple[int, str]] = []
    sign = 1
    buf = ""
    for ch in s:
        if ch in "+-" and buf:
            terms.append((sign, buf))
            sign = 1 if ch == "+" else -1
            buf = ""
        elif ch in "+-" and not buf:
            sign = sign * (1 if ch == "+" else -1)
        else:
            buf += ch
    if buf:
        terms.append((sign, buf))
    term_re = re.compile(
        r"^(?:(\d+(?:/\d+)?)\*)?([A-Za-z_]\w*(?:\*[A-Za-z_]\w*)*)$")
    parsed: List[Tuple[Word, Scalar]] = []
    for sg, term in terms:
        m = term_re.match(term)
        if m is None:
            raise BuildError(f"cannot parse relation term {term!r} in {text!r}")
        coeff_text, word_text = m.groups()
        c = field.coerce(coeff_text) if coeff_text else field.one
        if sg < 0:
            c = field.neg(c)
        parsed.append((parse_word(quiver, word_text), c))
    # merge duplicate words
    merged: Dict[Word, Scalar] = {}
    for w, c in parsed:
        _poly_add(field, merged, w, c)
    if not merged:
        raise BuildError(f"relation {text!r} collapses to zero")
    return Relation(quiver, tuple(sorted(merged.items())), display=text)


# ---------------------------------------------------------------------------
# Rewriting / Groebner completion on words
# ---------------------------------------------------------------------------

Poly = Dict[Word, Scalar]  # finitely many words -> nonzero coefficients


def _poly_add(field: Field, dst: Poly, w: Word, c: Scalar) -> None:
    cur = dst.get(w)
    if cur is None:
        if c != 0:
            dst[w] = c
    else:
        s = field.add(cur, c)
        if s == 0:
            del dst[w]
        else:
            dst[w] = s


class _Rewriter:
    """A reduction system lead -> rest under length-lex order."""

    def __init__(self, field: Field):
        self.field = field
        self.rules: List[Tuple[Word, Poly]] = []

    def _find_subword(self, w: Word, order: Optional[Sequence[int]] = None):
        idx = order if order is not None else range(len(self.rules))
        for ri in idx:
            lead, _ = self.rules[ri]
            L = len(lead)
            if L > len(w):
                continue
            for pos in range(len(w) - L + 1):
                if w[pos:pos + L] == lead:
                    return ri, pos
        return None

    def reduce(self, poly: Poly, rule_order: Optional[Sequence[int]] = None) -> Poly:
        f = self.field
        work = dict(poly)
        out: Poly = {}
        while work:
            w = max(work, key=_word_key)
            c = work.pop(w)
            hit = self._find_subword(w, rule_order)
            if hit is None:
                _poly_add(f, out, w, c)
                continue
            ri, pos = hit
            lead, rest = self.rules[ri]
            pre, post = w[:pos], w[pos + len(lead):]
            for rw, rc in rest.items():
                _poly_add(f, work, pre + rw + post, f.mul(c, rc))
        return out

    def add_rule(self, poly: Poly) -> bool:
        """Normalize and install ``poly`` as a rule; False if it reduced to 0."""
        f = self.field
        poly = self.reduce(poly)
        if not poly:
            return False
        lead = max(poly, key=_word_key)
        inv = f.inv(poly[lead])
        rest: Poly = {w: f.neg(f.mul(inv, c))
                      for w, c in poly.items() if w != lead}
        self.rules.append((lead, rest))
        return True


def _overlap_words(l1: Word, l2: Word) -> List[Tuple[Word, int]]:
    """Words where rules with leads l1, l2 both apply.

    Returns (word, position of l2 in word); covers proper prefix/suffix
    overlaps and full containment of l2 inside l1.
    """
    out = []
    # suffix of l1 == prefix of l2 (proper overlap)
    for t in range(1, min(len(l1), len(l2))):
        if l1[len(l1) - t:] == l2[:t]:
            out.append((l1 + l2[t:], len(l1) - t))
    # l2 contained in l1
    if len(l2) < len(l1):
        for pos in range(len(l1) - len(l2) + 1):
            if l1[pos:pos + len(l2)] == l2:
                out.append((l1, pos))
    return out


def _complete(rw: _Rewriter, degree_bound: int, max_rules: int = 4096) -> None:
    f = rw.field
    pending = list(range(len(rw.rules)))
    seen_pairs = set()
    while pending:
        i = pending.pop(0)
        for j in range(len(rw.rules)):
            for (a, b) in ((i, j), (j, i)):
                if (a, b) in seen_pairs:
                    continue
                seen_pairs.add((a, b))
                l1, r1 = rw.rules[a]
                l2, r2 = rw.rules[b]
                for w, pos in _overlap_words(l1, l2):
                    # two one-step rewrites of w; their difference is in the ideal
                    way1: Poly = {}
                    for ww, cc in r1.items():
                        _poly_add(f, way1, ww + w[len(l1):], cc)
                    way2: Poly = {}
                    pre, post = w[:pos], w[pos + len(l2):]
                    for ww, cc in r2.items():
                        _poly_add(f, way2, pre + ww + post, cc)
                    spoly = dict(way1)
                    for ww, cc in way2.items():
                        _poly_add(f, spoly, ww, f.neg(cc))
                    if rw.add_rule(spoly):
                        new_lead = rw.rules[-1][0]
                        if len(new_lead) >= degree_bound:
                            raise BuildError(
                                "completion produced a rule of degree "
                                f"{len(new_lead)} >= degree bound {degree_bound}; "
                                "dimension not certified finite")
                        if len(rw.rules) > max_rules:
                            raise BuildError(
                                "completion exceeded the rule budget; "
                                "dimension not certified finite")
                        pending.append(len(rw.rules) - 1)


# ---------------------------------------------------------------------------
# Algebras
# ---------------------------------------------------------------------------

Vec = Tuple[Scalar, ...]


class Algebra:
    """A finite-dimensional algebra with a pointed basis.

    Attributes:
        field: scalar field descriptor.
        labels: display label per basis element.
        mult: structure constants; ``mult[i][j]`` is the coefficient vector
            of ``b_i * b_j``.
        prims: basis indices of the complete list of primitive orthogonal
            idempotents (their sum is the unit).
        radical: basis indices spanning rad(A); together with ``prims`` they
            partition the basis.
        src, tgt: per basis element the prim *slot* (index into ``prims``)
            with ``b * e_src = b`` and ``e_tgt * b = b``.
        vertex_labels: display name per prim slot.
    """

    def __init__(self, field: Field, labels: Sequence[str],
                 mult: Sequence[Sequence[Vec]], prims: Sequence[int],
                 radical: Sequence[int], src: Sequence[int],
                 tgt: Sequence[int], vertex_labels: Sequence[str],
                 provenance: str, name: str = "",
                 quiver: Optional[Quiver] = None,
                 basis_words: Optional[Sequence] = None):
        n = len(labels)
        if len(mult) != n or any(len(row) != n for row in mult):
            raise BuildError("multiplication table shape mismatch")
        if sorted(list(prims) + list(radical)) != list(range(n)):
            raise BuildError("prims and radical must partition the basis")
        self.field = field
        self.labels = tuple(labels)
        self.mult = tuple(tuple(tuple(v) for v in row) for row in mult)
        self.prims = tuple(prims)
        self.radical = tuple(radical)
        self.src = tuple(src)
        self.tgt = tuple(tgt)
        self.vertex_labels = tuple(vertex_labels)
        self.provenance = provenance
        self.name = name or provenance
        self.quiver = quiver
        self.basis_words = tuple(basis_words) if basis_words is not None else None
        self._hash: Optional[int] = None

    # -- identity ----------------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def n_prims(self) -> int:
        return len(self.prims)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Algebra)
                and self.field == other.field
                and self.mult == other.mult
                and self.prims == other.prims
                and self.radical == other.radical
                and self.src == other.src
                and self.tgt == other.tgt)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, self.mult, self.prims,
                               self.radical, self.src, self.tgt))
        return self._hash

    def __repr__(self):
        return f"Algebra({self.name}, dim={self.dim} over {self.field})"

    # -- elements ------------------------------------------------------------

    def zero_vec(self) -> Vec:
        return tuple([self.field.zero] * self.dim)

    def basis_vec(self, i: int) -> Vec:
        return tuple(self.field.one if j == i else self.field.zero
                     for j in range(self.dim))

    def unit_vec(self) -> Vec:
        v = [self.field.zero] * self.dim
        for p in self.prims:
            v[p] = self.field.one
        return tuple(v)

    def mul_vec(self, u: Sequence[Scalar], v: Sequence[Scalar]) -> Vec:
        f = self.field
        out = [f.zero] * self.dim
        for i, ui in enumerate(u):
            if ui == 0:
                continue
            for j, vj in enumerate(v):
                if vj == 0:
                    continue
                c = f.mul(ui, vj)
                for k, w in enumerate(self.mult[i][j]):
                    if w != 0:
                        out[k] = f.add(out[k], f.mul(c, w))
        return tuple(out)

    def left_mult_matrix(self, i: int) -> Mat:
        """Matrix of x -> b_i * x on the regular module (columns = basis)."""
        m = Mat.zeros(self.field, self.dim, self.dim)
        for j in range(self.dim):
            for k, c in enumerate(self.mult[i][j]):
                if c != 0:
                    m.set(k, j, c)
        return m

    def right_mult_matrix(self, i: int) -> Mat:
        """Matrix of x -> x * b_i."""
        m = Mat.zeros(self.field, self.dim, self.dim)
        for j in range(self.dim):
            for k, c in enumerate(self.mult[j][i]):
                if c != 0:
                    m.set(k, j, c)
        return m

    def prim_slot_of_basis(self, basis_index: int) -> Optional[int]:
        for s, p in enumerate(self.prims):
            if p == basis_index:
                return s
        return None


@dataclass(frozen=True)
class Idempotent:
    """A sum of a subset of the distinguished primitive idempotents."""

    algebra: Algebra
    slots: FrozenSet[int]

    def __post_init__(self):
        for s in self.slots:
            if not 0 <= s < self.algebra.n_prims:
                raise BuildError(f"prim slot {s} out of range")

    @classmethod
    def from_slots(cls, algebra: Algebra, slots: Sequence[int]) -> "Idempotent":
        return cls(algebra, frozenset(slots))

    @classmethod
    def from_vertex_names(cls, algebra: Algebra, names: Sequence[str]) -> "Idempotent":
        slots = []
        for nm in names:
            if nm not in algebra.vertex_labels:
                raise BuildError(f"unknown vertex {nm!r}")
            slots.append(algebra.vertex_labels.index(nm))
        return cls(algebra, frozenset(slots))

    def vector(self) -> Vec:
        v = [self.algebra.field.zero] * self.algebra.dim
        for s in self.slots:
            v[self.algebra.prims[s]] = self.algebra.field.one
        return tuple(v)

    def complement(self) -> "Idempotent":
        return Idempotent(self.algebra,
                          frozenset(range(self.algebra.n_prims)) - self.slots)

    def is_full(self) -> bool:
        return len(self.slots) == self.algebra.n_prims

    def __str__(self):
        names = sorted(self.algebra.vertex_labels[s] for s in self.slots)
        return "e{" + ",".join(names) + "}"


# ---------------------------------------------------------------------------
# Path algebra construction
# ---------------------------------------------------------------------------

def completed_rewriter(field: Field, quiver: Quiver,
                       relations: Sequence[Relation],
                       degree_bound: int = 32) -> _Rewriter:
    """The completed rewriting system for the relation ideal.

    Exposed so that confluence can be spot-checked independently of the
    basis enumeration (reductions under shuffled rule orders must agree).
    """
    for rel in relations:
        if rel.quiver != quiver:
            raise BuildError("relation declared over a different quiver")
        rel.validate()
    if degree_bound < 2:
        raise BuildError("degree bound must be at least 2")
    rw = _Rewriter(field)
    for rel in relations:
        poly: Poly = {}
        for w, c in rel.terms:
            _poly_add(field, poly, w, field.coerce(c))
        rw.add_rule(poly)
    _complete(rw, degree_bound)
    return rw


def build_path_algebra(field: Field, quiver: Quiver,
                       relations: Sequence[Relation],
                       degree_bound: int = 32, name: str = "") -> Algebra:
    """The quotient of the path algebra by the relation ideal.

    Completes the rewriting system on path overlaps up to ``degree_bound``
    and enumerates normal-form paths.  Raises BuildError if any normal form
    reaches the bound (the algebra is then not certified finite-dimensional).
    """
    rw = completed_rewriter(field, quiver, relations, degree_bound)

    # Enumerate normal-form paths by length.
    leads = [lead for lead, _ in rw.rules]

    def irreducible(w: Word) -> bool:
        for lead in leads:
            L = len(lead)
            if L <= len(w):
                # new words grow on the right, so checking the suffix is enough
                if w[len(w) - L:] == lead:
                    return False
        return True

    words: List[Word] = []
    layer: List[Word] = []
    for ai in range(len(quiver.arrows)):
        w = (ai,)
        if irreducible(w):
            layer.append(w)
    length = 1
    while layer:
        if length >= degree_bound:
            raise BuildError(
                f"normal-form path of length {degree_bound} survives; "
                "dimension not certified finite within the degree bound")
        words.extend(layer)
        nxt: List[Word] = []
        for w in layer:
            t = quiver.arrow_target(w[-1])
            for ai in range(len(quiver.arrows)):
                if quiver.arrow_source(ai) == t:
                    w2 = w + (ai,)
                    if irreducible(w2):
                        nxt.append(w2)
        layer = nxt
        length += 1
    words.sort(key=_word_key)

    nv = len(quiver.vertices)
    basis_words: List = [("e", i) for i in range(nv)]
    basis_words += [("p", w) for w in words]
    labels = [f"e{quiver.vertices[i]}" for i in range(nv)]
    labels += [word_label(quiver, w) for w in words]
    index_of_word = {w: nv + t for t, w in enumerate(words)}
    n = len(basis_words)

    def word_endpoints(b) -> Tuple[int, int]:
        kind, data = b
        if kind == "e":
            return data, data
        return word_source(quiver, data), word_target(quiver, data)

    src = [word_endpoints(b)[0] for b in basis_words]
    tgt = [word_endpoints(b)[1] for b in basis_words]

    def reduce_word_to_vec(w: Word) -> Vec:
        poly = rw.reduce({w: field.one})
        v = [field.zero] * n
        for ww, c in poly.items():
            v[index_of_word[ww]] = c
        return tuple(v)

    zero = tuple([field.zero] * n)
    mult: List[List[Vec]] = [[zero] * n for _ in range(n)]
    for i in range(n):
        ki, di = basis_words[i]
        for j in range(n):
            kj, dj = basis_words[j]
            # product b_i * b_j: traverse b_j first, then b_i
            if ki == "e" and kj == "e":
                if di == dj:
                    v = [field.zero] * n
                    v[i] = field.one
                    mult[i][j] = tuple(v)
            elif ki == "e":
                if word_target(quiver, dj) == di:
                    v = [field.zero] * n
                    v[j] = field.one
                    mult[i][j] = tuple(v)
            elif kj == "e":
                if word_source(quiver, di) == dj:
                    v = [field.zero] * n
                    v[i] = field.one
                    mult[i][j] = tuple(v)
            else:
                w = compose_words(quiver, dj, di)
                if w is not None:
                    mult[i][j] = reduce_word_to_vec(w)

    return Algebra(field, labels, mult, prims=list(range(nv)),
                   radical=list(range(nv, n)), src=src, tgt=tgt,
                   vertex_labels=quiver.vertices, provenance="path-algebra",
                   name=name or "path-algebra", quiver=quiver,
                   basis_words=basis_words)


# ---------------------------------------------------------------------------
# Opposite and corner algebras
# ---------------------------------------------------------------------------

def opposite(a: Algebra) -> Algebra:
    """Same basis, reversed multiplication, src and tgt swapped."""
    n = a.dim
    mult = [[a.mult[j][i] for j in range(n)] for i in range(n)]
    return Algebra(a.field, a.labels, mult, a.prims, a.radical,
                   src=a.tgt, tgt=a.src, vertex_labels=a.vertex_labels,
                   provenance="opposite", name=f"op({a.name})",
                   quiver=None, basis_words=None)


@dataclass(frozen=True)
class CornerData:
    """A corner algebra eAe plus the embedding of its basis into A."""

    algebra: Algebra                 # the corner eAe
    ambient: Algebra
    idempotent: Idempotent
    embedding: Tuple[int, ...]       # corner basis index -> ambient basis index
    slot_map: Tuple[int, ...]        # corner prim slot -> ambient prim slot


def corner(a: Algebra, e: Idempotent) -> CornerData:
    """The corner algebra eAe for an idempotent built from the prims."""
    if e.algebra != a:
        raise BuildError("idempotent belongs to a different algebra")
    if not e.slots:
        raise BuildError("empty idempotent: corner would be the zero algebra")
    slots = sorted(e.slots)
    slot_rank = {s: t for t, s in enumerate(slots)}
    keep = [i for i in range(a.dim)
            if a.src[i] in e.slots and a.tgt[i] in e.slots]
    pos = {b: t for t, b in enumerate(keep)}
    labels = [a.labels[b] for b in keep]
    mult = []
    for i in keep:
        row = []
        for j in keep:
            v = a.mult[i][j]
            row.append(tuple(v[b] for b in keep))
            # sanity: the product may not leave the corner span
            for b, c in enumerate(v):
                if c != 0 and b not in pos:
                    raise BuildError("corner span not closed; basis not pointed")
        mult.append(row)
    prims = [pos[a.prims[s]] for s in slots]
    radical = [pos[b] for b in keep if b in set(a.radical)]
    src = [slot_rank[a.src[b]] for b in keep]
    tgt = [slot_rank[a.tgt[b]] for b in keep]
    vlabels = [a.vertex_labels[s] for s in slots]
    alg = Algebra(a.field, labels, mult, prims, radical, src, tgt, vlabels,
                  provenance="corner", name=f"corner({a.name},{e})")
    return CornerData(alg, a, e, tuple(keep), tuple(slots))


# ---------------------------------------------------------------------------
# Diagnostics
# ---------------------------------------------------------------------------

@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class Diagnostics:
    checks: List[CheckResult] = dc_field(default_factory=list)
    radical_nilpotency_index: Optional[int] = None

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(CheckResult(name, passed, detail))


def check_algebra(a: Algebra) -> Diagnostics:
    """Verify associativity, idempotent axioms, pointing and the radical."""
    d = Diagnostics()
    f = a.field
    n = a.dim

    assoc_ok = True
    detail = ""
    for i in range(n):
        for j in range(n):
            ij = a.mult[i][j]
            for k in range(n):
                left = a.mul_vec(ij, a.basis_vec(k))
                right = a.mul_vec(a.basis_vec(i), a.mult[j][k])
                if left != right:
                    assoc_ok = False
                    detail = f"(b{i}*b{j})*b{k} != b{i}*(b{j}*b{k})"
                    break
            if not assoc_ok:
                break
        if not assoc_ok:
            break
    d.add("associativity", assoc_ok, detail)

    idem_ok = True
    detail = ""
    for s, p in enumerate(a.prims):
        ep = a.basis_vec(p)
        if a.mul_vec(ep, ep) != ep:
            idem_ok = False
            detail = f"e[{a.vertex_labels[s]}] is not idempotent"
            break
        for s2, p2 in enumerate(a.prims):
            if s2 != s and a.mul_vec(ep, a.basis_vec(p2)) != a.zero_vec():
                idem_ok = False
                detail = f"e[{a.vertex_labels[s]}]*e[{a.vertex_labels[s2]}] != 0"
                break
        if not idem_ok:
            break
    d.add("primitive idempotents orthogonal and idempotent", idem_ok, detail)

    unit = a.unit_vec()
    unit_ok = all(a.mul_vec(unit, a.basis_vec(i)) == a.basis_vec(i)
                  and a.mul_vec(a.basis_vec(i), unit) == a.basis_vec(i)
                  for i in range(n))
    d.add("sum of prims is the unit", unit_ok)

    point_ok = True
    detail = ""
    for i in range(n):
        et = a.basis_vec(a.prims[a.tgt[i]])
        es = a.basis_vec(a.prims[a.src[i]])
        b = a.basis_vec(i)
        if a.mul_vec(et, b) != b or a.mul_vec(b, es) != b:
            point_ok = False
            detail = f"basis element {a.labels[i]} is not pointed"
            break
    d.add("basis is pointed by the prims", point_ok, detail)

    # radical: spanned by a basis subset, two-sided ideal, nilpotent
    rad_set = set(a.radical)
    ideal_ok = True
    detail = ""
    for r in a.radical:
        for i in range(n):
            for prod in (a.mult[i][r], a.mult[r][i]):
                if any(c != 0 and b not in rad_set
                       for b, c in enumerate(prod)):
                    ideal_ok = False
                    detail = f"radical not an ideal at ({a.labels[i]},{a.labels[r]})"
                    break
            if not ideal_ok:
                break
        if not ideal_ok:
            break
    d.add("radical basis spans a two-sided ideal", ideal_ok, detail)

    nilp_ok = False
    if ideal_ok:
        # J^k spans, pruned to independent sets; index = least k with J^k = 0
        layer = [a.basis_vec(r) for r in a.radical]
        k = 1
        if not layer:
            nilp_ok = True
            d.radical_nilpotency_index = 1
        while layer and k <= n + 1:
            nxt = []
            for u in layer:
                for r in a.radical:
                    p = a.mul_vec(u, a.basis_vec(r))
                    if any(c != 0 for c in p):
                        nxt.append(p)
            k += 1
            if not nxt:
                nilp_ok = True
                d.radical_nilpotency_index = k
                break
            mat = Mat.from_rows(f, [list(v) for v in nxt]).transpose()
            basis = column_space_basis(mat)
            layer = [tuple(basis.col(j)) for j in range(basis.cols)]
    d.add("radical is nilpotent", nilp_ok,
          f"index {d.radical_nilpotency_index}" if nilp_ok else "")

    # with the partition invariant, A/rad is spanned by the prim images and is
    # a product of copies of the base field, hence semisimple
    d.add("semisimple quotient (prims span A/rad)",
          sorted(list(a.prims) + list(a.radical)) == list(range(n)))
    return d


# ---------------------------------------------------------------------------
# Structure-constant matching (algebra isomorphism certificates)
# ---------------------------------------------------------------------------

def match_structure(a: Algebra, b: Algebra,
                    max_class_size: int = 8) -> Optional[Tuple[int, ...]]:
    """A basis bijection making the structure constants of a and b equal.

    Searches prim-slot bijections and, per (tgt, src) class, radical-basis
    bijections.  Exact coefficient equality is required, so this certifies an
    isomorphism when it succeeds (and proves nothing when it fails).
    Returns the map as a tuple: a-basis index -> b-basis index.
    """
    if a.field != b.field or a.dim != b.dim or a.n_prims != b.n_prims:
        return None
    rad_a = [i for i in range(a.dim) if i in set(a.radical)]
    rad_b = set(b.radical)

    def classes(alg, rad_indices):
        by_pair: Dict[Tuple[int, int], List[int]] = {}
        for i in rad_indices:
            by_pair.setdefault((alg.tgt[i], alg.src[i]), []).append(i)
        return by_pair

    cls_a = classes(a, rad_a)
    cls_b = classes(b, sorted(rad_b))

    for prim_perm in itertools.permutations(range(a.n_prims)):
        # class sizes must match under the prim relabeling
        ok = True
        for (t, s), elems in cls_a.items():
            if len(cls_b.get((prim_perm[t], prim_perm[s]), [])) != len(elems):
                ok = False
                break
        if not ok:
            continue
        if any(len(v) > max_class_size for v in cls_a.values()):
            raise BuildError("structure matching class too large")

        class_keys = sorted(cls_a.keys())
        pools = [list(itertools.permutations(
            cls_b[(prim_perm[t], prim_perm[s])])) for (t, s) in class_keys]
        for assignment in itertools.product(*pools):
            mapping = [-1] * a.dim
            for s_slot in range(a.n_prims):
                mapping[a.prims[s_slot]] = b.prims[prim_perm[s_slot]]
            for key, perm in zip(class_keys, assignment):
                for src_i, dst_i in zip(cls_a[key], perm):
                    mapping[src_i] = dst_i
            if _mapping_matches(a, b, mapping):
                return tuple(mapping)
    return None


def _mapping_matches(a: Algebra, b: Algebra, mapping: Sequence[int]) -> bool:
    for i in range(a.dim):
        for j in range(a.dim):
            v = a.mult[i][j]
            w = b.mult[mapping[i]][mapping[j]]
            for k, c in enumerate(v):
                if w[mapping[k]] != c:
                    return False
            # all other coordinates of w must be zero
            img = {mapping[k] for k, c in enumerate(v) if c != 0}
            for k2, c2 in enumerate(w):
                if c2 != 0 and k2 not in img:
                    return False
    return True


def verify_structure_match(a: Algebra, b: Algebra,
                           mapping: Sequence[int]) -> bool:
    """Re-verify a structure-constant matching certificate."""
    if sorted(mapping) != list(range(a.dim)) or a.dim != b.dim:
        return False
    if {mapping[p] for p in a.prims} != set(b.prims):
        return False
    return _mapping_matches(a, b, mapping)
