"""Text formats for algebras, modules and bimodules, plus report JSON.

Input files are a TOML-compatible sectioned format; path words inside them
use the function-style convention (in ``p*q`` the right factor is traversed
first), which the format header of every shipped fixture repeats.  Reports
are canonical JSON: sorted keys, exact string scalars, no volatile fields,
so identical inputs and seed produce byte-identical output.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

try:  # stdlib on 3.11+
    import tomllib
except ModuleNotFoundError:  # pragma: no cover
    import tomli as tomllib

from .algebras import (Algebra, BuildError, Quiver, build_path_algebra,
                       parse_relation)
from .exactla import Field, GF, Mat, QQ
from .homology import DimResult
from .modules import Module, ModuleError
from .triangular import Bimodule


class InputError(ValueError):
    """A file could not be parsed or validated; carries a location hint."""


def sha256_file(path: Path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def _field_from_table(table: dict, where: str) -> Field:
    ch = table.get("characteristic")
    if ch is None:
        raise InputError(f"{where}: missing field.characteristic")
    if ch == 0:
        return QQ
    try:
        return GF(int(ch))
    except ValueError as exc:
        raise InputError(f"{where}: bad characteristic {ch}: {exc}") from exc


# ---------------------------------------------------------------------------
# Algebra files
# ---------------------------------------------------------------------------

@dataclass
class LoadedAlgebra:
    algebra: Algebra
    quiver: Quiver
    field: Field
    path: Path
    digest: str
    degree_bound: int


def load_algebra(path, field_override: Optional[Field] = None) -> LoadedAlgebra:
    path = Path(path)
    where = str(path)
    try:
        data = tomllib.loads(path.read_text())
    except FileNotFoundError as exc:
        raise InputError(f"{where}: {exc}") from exc
    except tomllib.TOMLDecodeError as exc:
        raise InputError(f"{where}: TOML parse error: {exc}") from exc

    field = field_override or _field_from_table(data.get("field", {}), where)
    qt = data.get("quiver")
    if not qt or "vertices" not in qt:
        raise InputError(f"{where}: missing [quiver] section with vertices")
    vertices = tuple(str(v) for v in qt["vertices"])
    arrows = []
    for arr in qt.get("arrows", []):
        try:
            arrows.append((str(arr["name"]), str(arr["from"]), str(arr["to"])))
        except KeyError as exc:
            raise InputError(
                f"{where}: arrow entry needs name/from/to: {arr}") from exc
    try:
        quiver = Quiver(vertices, tuple(arrows))
    except BuildError as exc:
        raise InputError(f"{where}: {exc}") from exc

    degree_bound = int(data.get("options", {}).get("degree_bound", 32))
    rel_texts = data.get("relations", {}).get("words", [])
    try:
        rels = [parse_relation(quiver, field, t) for t in rel_texts]
        algebra = build_path_algebra(field, quiver, rels,
                                     degree_bound=degree_bound,
                                     name=path.stem)
    except BuildError as exc:
        raise InputError(f"{where}: {exc}") from exc
    return LoadedAlgebra(algebra, quiver, field, path, sha256_file(path),
                         degree_bound)


# ---------------------------------------------------------------------------
# Module files
# ---------------------------------------------------------------------------

def load_module(path, la: Optional[LoadedAlgebra] = None) -> Tuple[Module, dict]:
    """A module file: dimensions per vertex plus one matrix per arrow.

    The induced action must satisfy every algebra relation; violations are
    reported with the offending relation.  Returns the module and a metadata
    dict (algebra reference, digest).
    """
    path = Path(path)
    where = str(path)
    try:
        data = tomllib.loads(path.read_text())
    except FileNotFoundError as exc:
        raise InputError(f"{where}: {exc}") from exc
    except tomllib.TOMLDecodeError as exc:
        raise InputError(f"{where}: TOML parse error: {exc}") from exc

    alg_ref = data.get("algebra")
    if alg_ref is None:
        raise InputError(f"{where}: missing algebra reference")
    ref_path = (path.parent / alg_ref).resolve()
    if la is None:
        la = load_algebra(ref_path)
    a, quiver, field = la.algebra, la.quiver, la.field

    dims_table = data.get("dimensions", {})
    dims = []
    for v in quiver.vertices:
        if v not in dims_table:
            raise InputError(f"{where}: missing dimension for vertex {v!r}")
        d = int(dims_table[v])
        if d < 0:
            raise InputError(f"{where}: negative dimension at vertex {v!r}")
        dims.append(d)

    offsets = []
    total = 0
    for d in dims:
        offsets.append(total)
        total += d
    vertex_of = [i for i, d in enumerate(dims) for _ in range(d)]

    maps_table = data.get("maps", {})
    arrow_mats: List[Mat] = []
    for ai, (name, src_v, tgt_v) in enumerate(quiver.arrows):
        si, ti = quiver.vertex_index(src_v), quiver.vertex_index(tgt_v)
        rows_spec = maps_table.get(name, {}).get("rows")
        if rows_spec is None:
            block = Mat.zeros(field, dims[ti], dims[si])
        else:
            try:
                block = Mat.from_rows(field, rows_spec)
            except (ValueError, ZeroDivisionError) as exc:
                raise InputError(f"{where}: bad matrix for arrow {name!r}: "
                                 f"{exc}") from exc
            if (block.rows, block.cols) != (dims[ti], dims[si]):
                raise InputError(
                    f"{where}: matrix for arrow {name!r} must be "
                    f"{dims[ti]}x{dims[si]}, got {block.rows}x{block.cols}")
        big = Mat.zeros(field, total, total)
        for r in range(block.rows):
            for c in range(block.cols):
                v = block.get(r, c)
                if v != 0:
                    big.set(offsets[ti] + r, offsets[si] + c, v)
        arrow_mats.append(big)

    def word_action(word) -> Mat:
        out = Mat.identity(field, total)
        for ai in word:  # traversal order: first arrow applied first
            out = arrow_mats[ai] @ out
        return out

    # explicit relation check for a targeted error message
    for text in _relation_texts_of(la):
        rel = parse_relation(quiver, field, text)
        acc = Mat.zeros(field, total, total)
        for w, c in rel.terms:
            acc = acc + word_action(w).scale(c)
        if not acc.is_zero():
            raise InputError(
                f"{where}: the given matrices violate the relation {text!r}")

    action = []
    for kind, datum in a.basis_words:
        if kind == "e":
            m = Mat.zeros(field, total, total)
            for c in range(total):
                if vertex_of[c] == datum:
                    m.set(c, c, field.one)
            action.append(m)
        else:
            action.append(word_action(datum))
    try:
        mod = Module(a, vertex_of, action, validate=True)
    except ModuleError as exc:
        raise InputError(f"{where}: invalid module: {exc}") from exc
    meta = {"path": str(path), "sha256": sha256_file(path),
            "algebra": str(alg_ref)}
    return mod, meta


def _relation_texts_of(la: LoadedAlgebra) -> List[str]:
    data = tomllib.loads(la.path.read_text())
    return list(data.get("relations", {}).get("words", []))


# ---------------------------------------------------------------------------
# Bimodule files
# ---------------------------------------------------------------------------

@dataclass
class LoadedBimodule:
    bimodule: Bimodule
    left: LoadedAlgebra
    right: LoadedAlgebra
    path: Path
    digest: str


def load_bimodule(path, field_override: Optional[Field] = None) -> LoadedBimodule:
    """A bimodule file: graded coordinates plus per-arrow action matrices.

    ``left_maps`` act through the left algebra's arrows, ``right_maps``
    through the right algebra's; both sets must commute and respect the
    declared grading (verified on load).
    """
    path = Path(path)
    where = str(path)
    try:
        data = tomllib.loads(path.read_text())
    except FileNotFoundError as exc:
        raise InputError(f"{where}: {exc}") from exc
    except tomllib.TOMLDecodeError as exc:
        raise InputError(f"{where}: TOML parse error: {exc}") from exc

    try:
        left_la = load_algebra((path.parent / data["left_algebra"]).resolve(),
                               field_override)
        right_la = load_algebra((path.parent / data["right_algebra"]).resolve(),
                                field_override)
    except KeyError as exc:
        raise InputError(f"{where}: missing algebra reference {exc}") from exc
    field = left_la.field
    if field != right_la.field:
        raise InputError(f"{where}: left and right algebras over different "
                         "fields")

    coords = data.get("space", {}).get("coordinates")
    if coords is None:
        raise InputError(f"{where}: missing [space] coordinates")
    lv, rv = [], []
    for pair in coords:
        try:
            lname, rname = str(pair[0]), str(pair[1])
            lv.append(left_la.quiver.vertex_index(lname))
            rv.append(right_la.quiver.vertex_index(rname))
        except (ValueError, IndexError) as exc:
            raise InputError(f"{where}: bad coordinate grading {pair}: "
                             f"{exc}") from exc
    dim = len(coords)

    def arrow_actions(la: LoadedAlgebra, table_name: str) -> List[Mat]:
        table = data.get(table_name, {})
        mats = []
        for name, _s, _t in la.quiver.arrows:
            rows_spec = table.get(name, {}).get("rows")
            if rows_spec is None:
                mats.append(Mat.zeros(field, dim, dim))
            else:
                m = Mat.from_rows(field, rows_spec)
                if (m.rows, m.cols) != (dim, dim):
                    raise InputError(
                        f"{where}: {table_name}.{name} must be {dim}x{dim}")
                mats.append(m)
        return mats

    left_arrows = arrow_actions(left_la, "left_maps")
    right_arrows = arrow_actions(right_la, "right_maps")

    def grading_projector(vertex_of: Sequence[int], slot: int) -> Mat:
        m = Mat.zeros(field, dim, dim)
        for c, v in enumerate(vertex_of):
            if v == slot:
                m.set(c, c, field.one)
        return m

    left_action = []
    for kind, datum in left_la.algebra.basis_words:
        if kind == "e":
            left_action.append(grading_projector(lv, datum))
        else:
            out = Mat.identity(field, dim)
            for ai in datum:
                out = left_arrows[ai] @ out
            left_action.append(out)
    right_action = []
    for kind, datum in right_la.algebra.basis_words:
        if kind == "e":
            right_action.append(grading_projector(rv, datum))
        else:
            # right action of a path composes in traversal order on the left
            out = Mat.identity(field, dim)
            for ai in reversed(datum):
                out = out @ right_arrows[ai]
            right_action.append(out)
    try:
        bim = Bimodule(left_la.algebra, right_la.algebra, lv, rv,
                       left_action, right_action, validate=True)
    except (BuildError, ModuleError) as exc:
        raise InputError(f"{where}: invalid bimodule: {exc}") from exc
    return LoadedBimodule(bim, left_la, right_la, path, sha256_file(path))


# ---------------------------------------------------------------------------
# Report serialization (canonical JSON)
# ---------------------------------------------------------------------------

def ser_mat(m: Mat) -> dict:
    return {"rows": m.rows, "cols": m.cols,
            "entries": [[m.field.to_str(m.get(r, c)) for c in range(m.cols)]
                        for r in range(m.rows)]}


def deser_mat(field: Field, obj: dict) -> Mat:
    entries = [field.coerce(v) for row in obj["entries"] for v in row]
    return Mat(field, obj["rows"], obj["cols"], entries)


def ser_dimresult(d: DimResult) -> dict:
    if d.is_finite:
        return {"kind": "finite", "value": d.value}
    if d.is_infinite:
        return {"kind": "infinite", "j": d.j, "k": d.k,
                "iso": ser_mat(d.iso.mat),
                "omega_j_peirce": list(d.omega_j.peirce()),
                "omega_k_peirce": list(d.omega_k.peirce())}
    return {"kind": "unknown", "bound": d.bound}


def field_name(field: Field) -> str:
    return str(field)


def canonical_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"
