"""Command-line driver: run one job or a manifest of jobs, emit JSON results."""
from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

from gmpy2 import mpq

from .. import charclass as cc
from ..constructible import check_euler_relation
from ..errors import GenericityFailure, InputError, PreconditionError
from ..idealeng import collect_stats
from ..idealeng.generic import GenericityPolicy, use_policy
from ..polycore import to_rational
from ..singlocal import (
    GermMap,
    check_no_blowup_codim0,
    le_greuel_icis,
    milnor_number_hypersurface,
    relative_conormal_ideal,
)
from .jobs import JobSpec, load_job, load_manifest

EXIT_OK, EXIT_INPUT, EXIT_PRECONDITION, EXIT_GENERICITY = 0, 1, 2, 3
STATUS = {EXIT_OK: "ok", EXIT_INPUT: "input-error",
          EXIT_PRECONDITION: "precondition-failed", EXIT_GENERICITY: "genericity-failure"}


class CheckFailure(PreconditionError):
    """A verification job ran but its check did not hold."""


def rational_text(q) -> str:
    q = mpq(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _class(c: cc.CycleClass) -> Dict[str, Any]:
    return {"dimension": c.dimension, "fibre_dim": c.ambient.fibre_dim,
            "coefficients": list(c.coefficients), "support": c.support_tag}


def _points(job: JobSpec, default_origin: bool = True) -> List[Tuple[mpq, ...]]:
    pts = [tuple(to_rational(c) for c in p) for p in job.points]
    if not pts and default_origin:
        pts = [(mpq(0),) * len(job.ring)]
    return pts


def _per_point(pts, rows: List[Dict[str, Any]]) -> Dict[str, Any]:
    out: Dict[str, Any] = {"per_point": [dict(point=[rational_text(c) for c in p], **r)
                                         for p, r in zip(pts, rows)]}
    if len(rows) == 1:
        out.update(rows[0])
    return out


# -- commands ------------------------------------------------------------------------

def _milnor(job, R, F):
    pts = _points(job)
    rows = []
    for p in pts:
        if F.n == 1:
            rows.append({"mu": milnor_number_hypersurface(F.global_components[0], p)})
        else:
            rows.append({"mu": le_greuel_icis(GermMap(R, F.global_components, p))})
    return _per_point(pts, rows)


def _chi(job, R, F):
    pts = _points(job)
    return _per_point(pts, [{"chi": cc.chi_at_point(F.global_components[0], p)} for p in pts])


def _verify_euler(job, R, F):
    rep = check_euler_relation(F.global_components[0], _points(job))
    rows = [{"chi": e.chi, "mu": e.mu, "holds": e.holds} for e in rep.points]
    out = _per_point([e.point for e in rep.points], rows)
    out["passed"] = rep.passed
    if not rep.passed:
        raise CheckFailure("the Euler relation failed", out)
    return out


def _csm(job, R, F):
    res = cc.csm_projective_hypersurface(F.global_components[0])
    return {"csm_1X": list(res.csm_1X), "csm_chi_prime": list(res.csm_chi_prime),
            "csm_mu": list(res.csm_mu), "euler_characteristic": res.euler_characteristic,
            "projective_degrees": list(res.projective_degrees),
            "total_transform": _class(res.total_transform),
            "exceptional": _class(res.exceptional), "positivity": res.positivity()}


def _limit_cycle(job, R, F):
    G = cc.graph_limit_cycle(F.global_components[0])
    out = {"dominant": _class(G.dominant), "residual": _class(G.residual),
           "total": _class(G.total), "conserved": G.conserved()}
    if not G.conserved():
        raise CheckFailure("dominant + residual != total", out)
    return out


def _lagrangian(job, R, F):
    f = F.global_components[0]
    L = cc.lagrangian_specialisation(f)
    res = cc.graph_limit_cycle(f).residual
    xp = cc.total_transform_prime_class(f)
    out = {"cone_part": _class(L.cone_part), "cylinder_part": _class(L.cylinder_part),
           "graph_residual": _class(res), "total_transform": _class(xp),
           "cone_matches_residual": L.cone_part.coefficients == res.coefficients,
           "cylinder_matches_total_transform": L.cylinder_part.coefficients == xp.coefficients}
    if not (out["cone_matches_residual"] and out["cylinder_matches_total_transform"]):
        raise CheckFailure("Lagrangian specialisation disagrees with the graph limit", out)
    return out


def _conormal(job, R, F):
    con = relative_conormal_ideal(F)
    return {"base": list(con.base), "cotangent": list(con.cotangent),
            "generators": [str(g) for g in con.ideal.groebner()],
            "dimension": con.dimension(), "expected_dimension": F.m + F.n}


def _check_nbl(job, R, F):
    rep = check_no_blowup_codim0(F, [list(p) for p in job.points])
    out = {"fibre_dimensions": list(rep.fibre_dimensions), "expected": rep.expected,
           "conormal_dimension": rep.conormal_dimension, "passed": rep.passed}
    if not rep.passed:
        raise CheckFailure("fibre dimensions jump", out)
    return out


def _mu_total(job, R, F):
    via = cc.mu_total_via_Z(F)
    oracle = cc.mu_total_oracle(F)
    out = {"mu_total": via, "oracle": oracle, "agree": via == oracle}
    if via != oracle:
        raise CheckFailure("total Milnor number disagrees with the oracle", out)
    return out


def _segre(job, R, F):
    f = F.global_components[0]
    pts = _points(job)
    rows = []
    for p in pts:
        if job.space == "blowup":
            B, amb = cc.blowup_of_jacobian(f)
            dim = R.nvars
        elif job.space == "total-transform":
            B, amb = cc.total_transform_ideal(f, p)
            dim = R.nvars - 1
        else:
            B, amb = cc.sigma_f_ideal(f)
            dim = R.nvars
        s = cc.segre_class_fibre(B, amb, p, dimension=dim)
        integral = s.integrate(cc.ChernIntegrand.dual_tautological_quotient(amb.fibre_dim))
        rows.append({"segre": list(s.coefficients), "integral": integral})
    out = _per_point(pts, rows)
    out["space"] = job.space
    return out


HANDLERS = {
    "milnor": _milnor, "chi": _chi, "verify-euler": _verify_euler, "csm": _csm,
    "limit-cycle": _limit_cycle, "lagrangian": _lagrangian, "conormal": _conormal,
    "check-nbl": _check_nbl, "mu-total": _mu_total, "segre": _segre,
}


def run_job(job: JobSpec) -> Tuple[Dict[str, Any], int]:
    """Run one job; returns the result document and the exit code."""
    seed = job.effective_seed()
    policy = GenericityPolicy(seed=seed, retries=job.options.retries,
                              prescreen=job.options.field_prescreen)
    doc: Dict[str, Any] = {
        "command": job.command,
        "inputs": {"ring": list(job.ring), "map": list(job.map),
                   "points": [list(p) for p in job.points], "space": job.space,
                   "options": {"seed": seed, "retries": job.options.retries,
                               "field_prescreen": job.options.field_prescreen}},
    }
    if job.name:
        doc["name"] = job.name
    outputs: Dict[str, Any] = {}
    message = ""
    status = None
    with collect_stats() as stats, use_policy(policy):
        try:
            R = job.polynomial_ring()
            F = GermMap(R, tuple(R(p) for p in job.map))
            outputs = HANDLERS[job.command](job, R, F)
            code = EXIT_OK
        except CheckFailure as e:
            code, message, status = EXIT_PRECONDITION, e.args[0], "check-failed"
            outputs = e.args[1] if len(e.args) > 1 else {}
        except GenericityFailure as e:
            code, message = EXIT_GENERICITY, str(e)
        except (PreconditionError, NotImplementedError) as e:
            code, message = EXIT_PRECONDITION, f"{type(e).__name__}: {e}"
        except (InputError, ValueError) as e:
            code, message = EXIT_INPUT, f"{type(e).__name__}: {e}"
    doc["outputs"] = outputs
    doc["diagnostics"] = {k: stats[k] for k in sorted(stats)}
    doc["status"] = status or STATUS[code]
    if message:
        doc["message"] = message
    return doc, code


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _error_doc(status: str, message: str) -> Dict[str, Any]:
    return {"command": None, "inputs": {}, "outputs": {}, "diagnostics": {},
            "status": status, "message": message}


def _run_file(path: str, overrides: Dict[str, Any]) -> Tuple[str, Dict[str, Any], int, float]:
    t0 = time.perf_counter()
    try:
        job = load_job(path).with_options(**overrides)
    except OSError as e:
        return path, _error_doc("io-error", str(e)), EXIT_INPUT, 0.0
    except (InputError, ValueError) as e:
        return path, _error_doc("input-error", f"{type(e).__name__}: {e}"), EXIT_INPUT, 0.0
    doc, code = run_job(job)
    return path, doc, code, time.perf_counter() - t0


def run_suite(paths: Sequence, overrides: Optional[Dict[str, Any]] = None,
              workers: int = 1) -> Tuple[List[Dict[str, Any]], int]:
    """Run every job; rows follow manifest order. Exit code is the worst job code."""
    overrides = overrides or {}
    paths = [str(p) for p in paths]
    if workers > 1 and len(paths) > 1:
        with ProcessPoolExecutor(workers) as ex:
            results = list(ex.map(_run_file, paths, [overrides] * len(paths)))
    else:
        results = [_run_file(p, overrides) for p in paths]
    rows = [{"job": p, "status": d["status"], "exit": c, "seconds": round(t, 3), "result": d}
            for p, d, c, t in results]
    worst = max((r["exit"] for r in rows), default=EXIT_OK)
    return rows, worst


def summary_table(rows: List[Dict[str, Any]]) -> str:
    if not rows:
        return "(no jobs)\n"
    width = max(len(Path(r["job"]).name) for r in rows)
    lines = [f"{'job':<{width}}  {'status':<20} exit  seconds"]
    for r in rows:
        lines.append(f"{Path(r['job']).name:<{width}}  {r['status']:<20} {r['exit']:>4}  {r['seconds']:>7.3f}")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="singcycles",
                                description="Singularity invariants of polynomial map germs.")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--job", metavar="FILE", help="run one job file (.job text or .json)")
    src.add_argument("--suite", metavar="MANIFEST", help="run every job listed in a manifest")
    p.add_argument("--seed", type=int, help="64-bit seed for generic choices (default: job hash)")
    p.add_argument("--retries", type=int, help="retry budget for disagreeing random draws")
    p.add_argument("--prescreen", action="store_true", help="screen slices modulo a prime first")
    p.add_argument("--json-out", metavar="PATH", help="write the result JSON here")
    p.add_argument("--workers", type=int, default=1, help="parallel processes for --suite")
    p.add_argument("--quiet", action="store_true", help="no output on stdout/stderr")
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.seed is not None and not 0 <= args.seed < 2 ** 64:
        print("--seed must fit in 64 bits", file=sys.stderr)
        return EXIT_INPUT
    overrides = {"seed": args.seed, "retries": args.retries,
                 "field_prescreen": True if args.prescreen else None}
    if args.job:
        path, doc, code, secs = _run_file(args.job, overrides)
        text = dumps(doc)
        if not args.quiet:
            sys.stdout.write(text)
            print(f"{Path(path).name}: {doc['status']} in {secs:.3f} s", file=sys.stderr)
    else:
        try:
            paths = load_manifest(args.suite)
        except OSError as e:
            if not args.quiet:
                print(f"cannot read manifest: {e}", file=sys.stderr)
            return EXIT_INPUT
        rows, code = run_suite(paths, overrides, args.workers)
        text = dumps([{"job": Path(r["job"]).name, "exit": r["exit"], "result": r["result"]}
                      for r in rows])
        if not args.quiet:
            sys.stdout.write(summary_table(rows))
    if args.json_out:
        Path(args.json_out).write_text(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
