"""Command-line surface and JSON report emission.

Exit codes: 0 for a decisive verdict, 1 when any verdict is Unknown, 2 for
input errors, 3 for internal consistency failures (a cross-check such as
the two-sided dimension agreement failing, which indicates a bug rather
than an honest verdict).  With ``--json`` the canonical report is written
to stdout; timing goes to stderr so reports stay byte-identical across runs
with the same inputs and seed.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field as dc_field
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from . import __version__
from .algebras import BuildError, Idempotent, match_structure
from .exactla import Field, GF, QQ
from .homology import (ConsistencyError, DimResult, gorenstein, proj_dim,
                       resolve)
from .io import (InputError, LoadedAlgebra, canonical_json, deser_mat,
                 field_name, load_algebra, load_bimodule, load_module,
                 ser_dimresult, ser_mat)
from .modules import Module, ModuleMap, injective, projective, simple
from .schur import EquivalenceReport, theorem21_report, theorem41_report
from .triangular import (PreconditionError, build_triangular, gdim_bounds,
                         gorenstein_triangular)
from .algebras import check_algebra

EXIT_OK = 0
EXIT_UNKNOWN = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3


@dataclass
class RunResult:
    report: dict
    exit_code: int
    lines: List[str]
    certificates: Dict[str, DimResult] = dc_field(default_factory=dict)


def _field_of_name(name: str) -> Field:
    if name == "QQ":
        return QQ
    if name.startswith("GF(") and name.endswith(")"):
        return GF(int(name[3:-1]))
    raise InputError(f"unknown field name {name!r}")


def _base_report(command: str, la: LoadedAlgebra, opts: dict,
                 extra_inputs: Optional[dict] = None) -> dict:
    inputs = {"algebra": {"path": str(la.path), "sha256": la.digest}}
    if extra_inputs:
        inputs.update(extra_inputs)
    return {
        "tool": "quiverhom",
        "version": __version__,
        "command": command,
        "field": field_name(la.field),
        "inputs": inputs,
        "options": dict(opts),
    }


# ---------------------------------------------------------------------------
# check
# ---------------------------------------------------------------------------

def run_check(algebra_path: str, bound: int = 20, seed: int = 0) -> RunResult:
    la = load_algebra(algebra_path)
    diag = check_algebra(la.algebra)
    report = _base_report("check", la, {"bound": bound, "seed": seed})
    report["verdicts"] = {
        "dimension": la.algebra.dim,
        "basis": list(la.algebra.labels),
        "radical_nilpotency_index": diag.radical_nilpotency_index,
        "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail}
                   for c in diag.checks],
        "all_passed": diag.ok,
    }
    lines = [f"algebra {la.algebra.name}: dimension {la.algebra.dim}",
             f"basis: {', '.join(la.algebra.labels)}"]
    lines += [f"  [{'ok' if c.passed else 'FAIL'}] {c.name}"
              + (f" ({c.detail})" if c.detail else "")
              for c in diag.checks]
    code = EXIT_OK if diag.ok else EXIT_INTERNAL
    return RunResult(report, code, lines)


# ---------------------------------------------------------------------------
# resolve
# ---------------------------------------------------------------------------

def _select_module(la: LoadedAlgebra, selector: Tuple[str, str]
                   ) -> Tuple[Module, dict]:
    kind, value = selector
    if kind == "file":
        mod, meta = load_module(value)
        ref = load_algebra((Path(value).parent / meta["algebra"]).resolve())
        if ref.algebra != la.algebra:
            raise InputError(
                f"{value}: module references a structurally different "
                "algebra than the one given on the command line")
        return mod, {"kind": "file", **meta}
    try:
        slot = la.algebra.vertex_labels.index(value)
    except ValueError as exc:
        raise InputError(f"unknown vertex {value!r}") from exc
    builders = {"simple": simple, "projective": projective,
                "injective": injective}
    return builders[kind](la.algebra, slot), {"kind": kind, "vertex": value}


def run_resolve(algebra_path: str, selector: Tuple[str, str],
                bound: int = 20, seed: int = 0) -> RunResult:
    la = load_algebra(algebra_path)
    mod, mmeta = _select_module(la, selector)
    res = resolve(mod, bound=bound, seed=seed)
    pd = proj_dim(mod, bound=bound, seed=seed)
    report = _base_report("resolve", la, {"bound": bound, "seed": seed},
                          {"module": mmeta})
    report["verdicts"] = {
        "module_dim": mod.dim,
        "module_peirce": list(mod.peirce()),
        "syzygy_dims": [s.dim for s in res.syzygies],
        "terminated": res.terminated,
        "proj_dim": ser_dimresult(pd),
    }
    lines = [f"module dim {mod.dim}, peirce {mod.peirce()}",
             "stripped syzygy dims: "
             + ", ".join(str(s.dim) for s in res.syzygies),
             f"proj.dim = {pd.describe()}"]
    code = EXIT_UNKNOWN if pd.is_unknown else EXIT_OK
    return RunResult(report, code, lines, {"proj_dim": pd})


# ---------------------------------------------------------------------------
# gorenstein
# ---------------------------------------------------------------------------

def run_gorenstein(algebra_path: str, bound: int = 20,
                   seed: int = 0) -> RunResult:
    la = load_algebra(algebra_path)
    g = gorenstein(la.algebra, bound=bound, seed=seed)
    report = _base_report("gorenstein", la, {"bound": bound, "seed": seed})
    report["verdicts"] = {
        "kind": g.kind,
        "gdim": g.gdim,
        "witness_side": g.witness_side,
        "left_injective_dimension": ser_dimresult(g.left),
        "right_injective_dimension": ser_dimresult(g.right),
    }
    lines = [f"{la.algebra.name}: {g.describe()}",
             f"  left  inj.dim: {g.left.describe()}",
             f"  right inj.dim: {g.right.describe()}"]
    code = EXIT_UNKNOWN if g.kind == "unknown" else EXIT_OK
    return RunResult(report, code, lines,
                     {"left_injective_dimension": g.left,
                      "right_injective_dimension": g.right})


# ---------------------------------------------------------------------------
# schur
# ---------------------------------------------------------------------------

def ser_equivalence(rep: EquivalenceReport) -> dict:
    def ser_value(v):
        if isinstance(v, DimResult):
            return ser_dimresult(v)
        if isinstance(v, (list, tuple)):
            return [ser_value(x) for x in v]
        if isinstance(v, dict):
            return {k: ser_value(x) for k, x in v.items()}
        if v is None or isinstance(v, (bool, int, str)):
            return v
        return str(v)

    return {
        "theorem": rep.theorem,
        "status": rep.status,
        "conclusion": rep.conclusion,
        "decorations": list(rep.decorations),
        "scope": rep.scope,
        "corner": None if rep.corner is None else
            {"name": rep.corner.name, "dim": rep.corner.dim},
        "checklist": [{"name": c.name, "status": c.status, "detail": c.detail}
                      for c in rep.checklist],
        "data": {k: ser_value(v) for k, v in sorted(rep.data.items())},
    }


def _equivalence_lines(rep: EquivalenceReport) -> List[str]:
    lines = [f"criterion: {rep.theorem}", f"status: {rep.status}"]
    for c in rep.checklist:
        lines.append(f"  [{c.status}] {c.name}" +
                     (f" ({c.detail})" if c.detail else ""))
    if rep.conclusion:
        lines.append(f"conclusion: {rep.conclusion}")
    for d in rep.decorations:
        lines.append(f"  + {d}")
    return lines


def run_schur(algebra_path: str, vertices: List[str], bound: int = 20,
              seed: int = 0) -> RunResult:
    la = load_algebra(algebra_path)
    try:
        e = Idempotent.from_vertex_names(la.algebra, vertices)
    except BuildError as exc:
        raise InputError(str(exc)) from exc
    rep = theorem21_report(la.algebra, e, bound=bound, seed=seed)
    report = _base_report("schur", la, {"bound": bound, "seed": seed,
                                        "idempotent": sorted(vertices)})
    report["verdicts"] = ser_equivalence(rep)
    certs: Dict[str, DimResult] = {}
    if isinstance(rep.data.get("eA_pd"), DimResult):
        certs["data.eA_pd"] = rep.data["eA_pd"]
    code = EXIT_UNKNOWN if rep.status == "inconclusive" else EXIT_OK
    return RunResult(report, code, _equivalence_lines(rep), certs)


# ---------------------------------------------------------------------------
# triangular
# ---------------------------------------------------------------------------

def run_triangular(orientation: str, r_path: str, s_path: str, bim_path: str,
                   bound: int = 20, seed: int = 0) -> RunResult:
    lb = load_bimodule(bim_path)
    la1 = load_algebra(r_path)
    la2 = load_algebra(s_path)
    swapped = False
    if la1.algebra == lb.left.algebra and la2.algebra == lb.right.algebra:
        pass
    elif la2.algebra == lb.left.algebra and la1.algebra == lb.right.algebra:
        la1, la2 = la2, la1
        swapped = True
    else:
        raise InputError(
            "the two algebra files do not match the bimodule's declared "
            "left/right algebras")
    r, s, m = lb.left.algebra, lb.right.algebra, lb.bimodule

    t = build_triangular(r, s, m, orientation)
    rv = gorenstein(r, bound=bound, seed=seed)
    sv = gorenstein(s, bound=bound, seed=seed)
    verdicts: dict = {"orientation": orientation,
                      "algebra_dim": t.algebra.dim,
                      "factor_gorenstein": {"r": rv.kind, "s": sv.kind},
                      "positional_arguments_swapped": swapped}
    certs: Dict[str, DimResult] = {}
    lines = [f"triangular algebra dim {t.algebra.dim} ({orientation})"]
    unknown = False

    if rv.is_gorenstein and sv.is_gorenstein:
        crit = gorenstein_triangular(r, s, m, bound=bound, seed=seed,
                                     r_verdict=rv, s_verdict=sv)
        verdicts["criterion"] = {
            "kind": crit.kind,
            "witness_side": crit.witness_side,
            "left_pd": ser_dimresult(crit.left_pd),
            "right_pd": ser_dimresult(crit.right_pd),
        }
        certs["criterion.left_pd"] = crit.left_pd
        certs["criterion.right_pd"] = crit.right_pd
        lines.append(f"bimodule criterion: {crit.describe()}")
        lo, hi = gdim_bounds(r, s, bound=bound, seed=seed,
                             r_verdict=rv, s_verdict=sv)
        verdicts["gdim_bounds"] = [lo, hi]
        lines.append(f"G.dim bounds from the factors: [{lo}, {hi}]")
        unknown = unknown or crit.kind == "unknown"

        direct = gorenstein(t.algebra, bound=bound, seed=seed)
        verdicts["direct"] = {"kind": direct.kind, "gdim": direct.gdim}
        certs["direct.left"] = direct.left
        certs["direct.right"] = direct.right
        verdicts["direct"]["left_injective_dimension"] = ser_dimresult(direct.left)
        verdicts["direct"]["right_injective_dimension"] = ser_dimresult(direct.right)
        lines.append(f"direct verdict on the whole algebra: {direct.describe()}")
        if crit.kind != "unknown" and direct.kind != "unknown":
            if crit.kind != direct.kind:
                raise ConsistencyError(
                    "bimodule criterion and direct computation disagree: "
                    f"{crit.kind} vs {direct.kind}")
            verdicts["cross_validated"] = True
        if direct.is_gorenstein:
            if not (lo <= direct.gdim <= hi):
                raise ConsistencyError(
                    f"G.dim {direct.gdim} escapes the bounds [{lo}, {hi}]")
            lines.append(f"G.dim {direct.gdim} lies inside [{lo}, {hi}]")
        unknown = unknown or direct.kind == "unknown"
    else:
        verdicts["criterion"] = {
            "kind": "not_applicable",
            "reason": "a factor is not certified Gorenstein",
        }
        lines.append("bimodule criterion not applicable "
                     "(a factor is not certified Gorenstein)")
        unknown = unknown or rv.kind == "unknown" or sv.kind == "unknown"

    rep = theorem41_report(t, bound=bound, seed=seed)
    verdicts["reduction"] = ser_equivalence(rep)
    lines += _equivalence_lines(rep)
    unknown = unknown or rep.status == "inconclusive"

    report = {
        "tool": "quiverhom",
        "version": __version__,
        "command": "triangular",
        "field": field_name(lb.left.field),
        "inputs": {
            "r_algebra": {"path": str(la1.path), "sha256": la1.digest},
            "s_algebra": {"path": str(la2.path), "sha256": la2.digest},
            "bimodule": {"path": str(lb.path), "sha256": lb.digest},
        },
        "options": {"bound": bound, "seed": seed,
                    "orientation": orientation},
        "verdicts": verdicts,
    }
    code = EXIT_UNKNOWN if unknown else EXIT_OK
    return RunResult(report, code, lines, certs)


# ---------------------------------------------------------------------------
# report re-verification
# ---------------------------------------------------------------------------

def _rerun(report: dict, base_dir: Optional[Path] = None) -> RunResult:
    cmd = report["command"]
    opts = report["options"]
    inputs = report["inputs"]

    def path_of(entry):
        p = Path(entry["path"])
        if base_dir is not None and not p.is_absolute():
            p = base_dir / p
        return str(p)

    if cmd == "check":
        return run_check(path_of(inputs["algebra"]),
                         bound=opts["bound"], seed=opts["seed"])
    if cmd == "resolve":
        msel = inputs["module"]
        selector = (("file", path_of(msel)) if msel["kind"] == "file"
                    else (msel["kind"], msel["vertex"]))
        return run_resolve(path_of(inputs["algebra"]), selector,
                           bound=opts["bound"], seed=opts["seed"])
    if cmd == "gorenstein":
        return run_gorenstein(path_of(inputs["algebra"]),
                              bound=opts["bound"], seed=opts["seed"])
    if cmd == "schur":
        return run_schur(path_of(inputs["algebra"]), opts["idempotent"],
                         bound=opts["bound"], seed=opts["seed"])
    if cmd == "triangular":
        return run_triangular(opts["orientation"],
                              path_of(inputs["r_algebra"]),
                              path_of(inputs["s_algebra"]),
                              path_of(inputs["bimodule"]),
                              bound=opts["bound"], seed=opts["seed"])
    raise InputError(f"unknown command {cmd!r} in report")


def _serialized_certificates(verdicts: dict, prefix: str = "") -> List[Tuple[str, dict]]:
    """All serialized tri-state results carrying stage data, by dotted key."""
    out = []
    for key, value in verdicts.items():
        if not isinstance(value, dict):
            continue
        path = f"{prefix}{key}"
        if value.get("kind") in ("finite", "infinite", "unknown"):
            out.append((path, value))
        else:
            out.extend(_serialized_certificates(value, path + "."))
    return out


def reverify_report(report: dict, base_dir: Optional[Path] = None) -> bool:
    """Recompute a report from its inputs and re-check its certificates.

    The fresh run must reproduce the stored report byte-for-byte (same
    inputs, bound and seed), and every stored InfiniteCertified isomorphism
    matrix must still intertwine the freshly recomputed syzygies and be
    invertible.
    """
    fresh = _rerun(report, base_dir)
    if fresh.report != report:
        return False
    field = _field_of_name(report["field"])
    stored = dict(_serialized_certificates(report["verdicts"]))
    for key, d in fresh.certificates.items():
        # map the certificate key into the serialized verdict tree
        candidates = [v for k, v in stored.items() if k.endswith(key)]
        for ser in candidates:
            if ser.get("kind") != "infinite":
                continue
            if not d.is_infinite:
                return False
            mat = deser_mat(field, ser["iso"])
            probe = ModuleMap(d.omega_j, d.omega_k, mat)
            if not (probe.verify() and probe.is_iso()):
                return False
    return True


# ---------------------------------------------------------------------------
# argparse wiring
# ---------------------------------------------------------------------------

def _common_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--bound", type=int, default=20,
                   help="syzygy search bound (default 20)")
    p.add_argument("--seed", type=int, default=0,
                   help="seed for randomized isomorphism searches")
    p.add_argument("--json", action="store_true",
                   help="emit the canonical JSON report on stdout")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="quiverhom",
        description="homological certificates for finite-dimensional "
                    "quiver algebras")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="build an algebra file and run diagnostics")
    p.add_argument("algebra")
    _common_flags(p)

    p = sub.add_parser("resolve", help="resolution and projective dimension")
    p.add_argument("algebra")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--module", help="module file")
    g.add_argument("--simple", metavar="VERTEX")
    g.add_argument("--projective", metavar="VERTEX")
    g.add_argument("--injective", metavar="VERTEX")
    _common_flags(p)

    p = sub.add_parser("gorenstein", help="two-sided self-injective dimension")
    p.add_argument("algebra")
    _common_flags(p)

    p = sub.add_parser("schur", help="corner-reduction equivalence report")
    p.add_argument("algebra")
    p.add_argument("--idempotent", required=True,
                   help="comma-separated vertex names, e.g. 1 or 1,2")
    _common_flags(p)

    p = sub.add_parser("triangular",
                       help="triangular-algebra criteria and reduction")
    og = p.add_mutually_exclusive_group(required=True)
    og.add_argument("--upper", action="store_true")
    og.add_argument("--lower", action="store_true")
    p.add_argument("r_algebra")
    p.add_argument("s_algebra")
    p.add_argument("bimodule")
    _common_flags(p)

    p = sub.add_parser("reverify", help="recompute a report and re-check "
                                        "its certificates")
    p.add_argument("report")
    _common_flags(p)
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    t0 = time.monotonic()
    try:
        if args.command == "check":
            rr = run_check(args.algebra, args.bound, args.seed)
        elif args.command == "resolve":
            if args.module:
                selector = ("file", args.module)
            elif args.simple:
                selector = ("simple", args.simple)
            elif args.projective:
                selector = ("projective", args.projective)
            else:
                selector = ("injective", args.injective)
            rr = run_resolve(args.algebra, selector, args.bound, args.seed)
        elif args.command == "gorenstein":
            rr = run_gorenstein(args.algebra, args.bound, args.seed)
        elif args.command == "schur":
            vertices = [v for v in args.idempotent.split(",") if v]
            rr = run_schur(args.algebra, vertices, args.bound, args.seed)
        elif args.command == "triangular":
            orientation = "upper" if args.upper else "lower"
            rr = run_triangular(orientation, args.r_algebra, args.s_algebra,
                                args.bimodule, args.bound, args.seed)
        elif args.command == "reverify":
            report = json.loads(Path(args.report).read_text())
            # relative input paths are resolved against the working directory,
            # matching how the report was produced
            ok = reverify_report(report)
            rr = RunResult({"reverified": ok}, EXIT_OK if ok else EXIT_INTERNAL,
                           [f"certificates re-verify: {ok}"])
        else:  # pragma: no cover
            raise InputError(f"unknown command {args.command!r}")
    except (InputError, BuildError, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL

    if getattr(args, "json", False) and args.command != "reverify":
        sys.stdout.write(canonical_json(rr.report))
    else:
        for line in rr.lines:
            print(line)
    print(f"elapsed: {time.monotonic() - t0:.3f}s", file=sys.stderr)
    return rr.exit_code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
