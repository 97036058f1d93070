"""Command line front end: ``crkit <subcommand> ...``.

Exit codes: 0 success, 1 invalid input or I/O failure (one diagnostic line on
stderr), 2 an internal consistency check failed.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import __version__
from .cralg import CRAlgebra, InconsistentAlgebraError, PreconditionError, is_hnr, is_n_reductive
from .exact import ExactMatrix
from .grassmann import (
    InternalConsistencyError,
    InvalidParameters,
    OrbitDescriptor,
    cr_algebra,
    duality_catalog,
    enumerate_orbits,
    orbit_report,
    reports_to_csv,
    validate_range,
)
from .liealg import (
    InternalCheckError,
    LieSubalgebra,
    NotSubalgebraError,
    is_killing_negative_semidefinite,
    killing_form,
    nilradical,
    radical,
)

EXIT_OK, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2


class UsageError(Exception):
    pass


def _threads() -> int:
    raw = os.environ.get("CRKIT_THREADS", "1")
    try:
        val = int(raw)
    except ValueError:
        raise UsageError(f"CRKIT_THREADS must be a positive integer, got {raw!r}")
    if val < 1:
        raise UsageError(f"CRKIT_THREADS must be a positive integer, got {raw!r}")
    return val


def _report_job(args):
    d, levi, seed, samples = args
    return orbit_report(d, levi=levi, seed=seed, samples=samples).to_json()


def _reports(p, q, m, levi=False, seed=0, samples=32) -> list[dict]:
    jobs = [(d, levi, seed, samples) for d in enumerate_orbits(p, q, m)]
    workers = min(_threads(), len(jobs)) or 1
    if workers == 1:
        return [_report_job(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        # map preserves input order, so output does not depend on scheduling
        return list(ex.map(_report_job, jobs))


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _emit(text: str, output: str | None):
    if output:
        try:
            with open(output, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            raise UsageError(f"cannot write {output}: {exc.strerror or exc}")
    else:
        sys.stdout.write(text)


def _pretty(records: list[dict]) -> str:
    head = f"{'a':>2} {'b':>2} {'c':>2}  {'n':>3} {'k':>3}  {'fn':>3} {'fk':>3} {'mu':>3}  {'nred':>5} {'hnr':>12}  discrepancies"
    lines = [head]
    for r in records:
        disc = ",".join(x["field"] for x in r["discrepancies"]) or "-"
        lines.append(
            f"{r['a']:>2} {r['b']:>2} {r['c']:>2}  {r['oracle']['n']:>3} {r['oracle']['k']:>3}  "
            f"{r['formula']['n']:>3} {r['formula']['k']:>3} {r['formula']['mu']:>3}  "
            f"{str(r['flags']['n_reductive']).lower():>5} {r['flags']['hnr']:>12}  {disc}"
        )
    return "\n".join(lines) + "\n"


# --- subcommands ----------------------------------------------------------------------------

def cmd_orbits(ns) -> int:
    validate_range(ns.p, ns.q, ns.m)
    recs = _reports(ns.p, ns.q, ns.m, levi=ns.levi, seed=ns.seed, samples=ns.samples)
    if ns.format == "csv":
        text = reports_to_csv(recs)
    elif ns.format == "pretty":
        text = _pretty(recs)
    else:
        text = _dump_json(recs)
    _emit(text, ns.output)
    return EXIT_OK


def cmd_duality(ns) -> int:
    validate_range(ns.p, ns.q, ns.m)
    cat = [x.to_json() for x in duality_catalog(ns.p, ns.q, ns.m)]
    if ns.format == "pretty":
        lines = [f"{c['M_plus']:>10} <-> {c['M_minus']:<10} certified={c['certificate']['in_M_plus'] and c['certificate']['in_M_minus']}" for c in cat]
        text = "\n".join(lines) + "\n"
    elif ns.format == "csv":
        rows = ["p,q,m,a,b,c,M_plus,M_minus,in_M_plus,in_M_minus"]
        for c in cat:
            ce = c["certificate"]
            rows.append(
                f"{c['p']},{c['q']},{c['m']},{c['a']},{c['b']},{c['c']},{c['M_plus']},{c['M_minus']},"
                f"{str(ce['in_M_plus']).lower()},{str(ce['in_M_minus']).lower()}"
            )
        text = "\n".join(rows) + "\n"
    else:
        text = _dump_json(cat)
    _emit(text, ns.output)
    return EXIT_OK


def cmd_report(ns) -> int:
    validate_range(ns.p, ns.q, ns.m)
    recs = _reports(ns.p, ns.q, ns.m)
    comparisons, discrepancies = [], []
    for r in recs:
        regime = "formula_regime" if r["a"] * r["c"] == 0 and r["b"] * r["c"] == 0 else "mixed_regime"
        comparisons.append({
            "a": r["a"],
            "b": r["b"],
            "c": r["c"],
            "regime": regime,
            "formula": {"n": r["formula"]["n"], "k": r["formula"]["k"]},
            "oracle": dict(r["oracle"]),
            "match": not r["discrepancies"],
        })
        for x in r["discrepancies"]:
            discrepancies.append({"a": r["a"], "b": r["b"], **x})
    out = {
        "p": ns.p,
        "q": ns.q,
        "m": ns.m,
        "orbits": len(recs),
        "comparisons": comparisons,
        "discrepancies": discrepancies,
    }
    _emit(_dump_json(out), ns.output)
    return EXIT_OK


def _load_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}")
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON in {path}: {exc.msg}")


def _preset(text: str) -> OrbitDescriptor:
    kind, _, rest = text.partition(":")
    if kind != "grassmann":
        raise UsageError(f"unknown preset {text!r}; expected grassmann:p,q,m,a,b")
    try:
        p, q, m, a, b = (int(x) for x in rest.split(","))
    except ValueError:
        raise UsageError(f"malformed preset {text!r}; expected grassmann:p,q,m,a,b")
    return OrbitDescriptor(p, q, m, a, b)


def _algebra(ns) -> tuple[CRAlgebra, OrbitDescriptor | None]:
    if ns.preset:
        d = _preset(ns.preset)
        return cr_algebra(d), d
    if ns.v_spec:
        data = _load_json(ns.v_spec)
        try:
            return CRAlgebra.from_json(data), None
        except (KeyError, TypeError) as exc:
            raise UsageError(f"malformed CR algebra spec: missing or bad field {exc}")
    if ns.p is not None and ns.m is not None and ns.a is not None and ns.b is not None:
        d = OrbitDescriptor(ns.p, ns.q, ns.m, ns.a, ns.b)
        return cr_algebra(d), d
    raise UsageError("give --preset, --v-spec, or -p -q -m -a -b")


def cmd_check(ns) -> int:
    from .levi import characteristic_basis, levi_report, pseudoconcavity_estimate

    alg, d = _algebra(ns)
    want_all = not (ns.n_reductive or ns.hnr or ns.levi)
    nred = is_n_reductive(alg)
    rec = {
        "context": alg.context.to_json(),
        "dims": {"k": alg.context.k.dim, "v": alg.v.dim, "v_r": alg.v_r.dim, "v_n": alg.v_n.dim},
        "n": alg.n_cr,
        "k": alg.k_cr,
    }
    if d is not None:
        rec["descriptor"] = {"p": d.p, "q": d.q, "m": d.m, "a": d.a, "b": d.b, "c": d.c}
        rec["open_orbit"] = d.c == 0
    if want_all or ns.n_reductive or ns.hnr or ns.levi:
        rec["n_reductive"] = nred
    if want_all or ns.hnr:
        rec["hnr"] = str(is_hnr(alg)) if nred else "not_applicable"
    if (want_all or ns.levi) and nred:
        basis = characteristic_basis(alg)
        mu = d.formula_mu() if d is not None else None
        est = pseudoconcavity_estimate(alg, seed=ns.seed, count=ns.samples, closed_form_mu=mu)
        levi = {"dim_m0": len(basis), "estimate": est.to_json()}
        if basis and alg.v_n.dim:
            levi["axis_reports"] = [levi_report(alg, [1 if j == i else 0 for j in range(len(basis))]).to_json() for i in range(len(basis))]
        rec["levi"] = levi
    _emit(_dump_json(rec), ns.output)
    return EXIT_OK


def cmd_analyze(ns) -> int:
    if not ns.v_spec:
        raise UsageError("analyze needs --v-spec file.json")
    data = _load_json(ns.v_spec)
    try:
        g = LieSubalgebra.from_json(data)
    except (KeyError, TypeError) as exc:
        raise UsageError(f"malformed Lie algebra spec: missing or bad field {exc}")
    rad = radical(g)
    nil = nilradical(g)
    try:
        nsd = is_killing_negative_semidefinite(g)
    except ValueError:
        nsd = None
    rec = {
        "ambient_n": g.ambient_n,
        "dim": g.dim,
        "radical_dim": rad.dim,
        "nilradical_dim": nil.dim,
        "solvable": rad.dim == g.dim,
        "semisimple": rad.dim == 0,
        "killing_form": killing_form(g).to_json(),
        "killing_negative_semidefinite_on_basis": nsd,
        "nilradical": nil.to_json()["basis"],
    }
    _emit(_dump_json(rec), ns.output)
    return EXIT_OK


def cmd_mostow(ns) -> int:
    from .mostow import jacobian_probe

    if ns.radius <= 0 or ns.samples < 1:
        raise UsageError("radius must be positive and samples at least 1")
    alg, _ = _algebra(ns)
    rep = jacobian_probe(alg, radius=ns.radius, samples=ns.samples, seed=ns.seed)
    _emit(rep.dumps() + "\n", ns.output)
    return EXIT_OK


# --- parser ------------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="crkit", description="Invariants of homogeneous CR manifolds and SU(p,q) orbit catalogs.")
    ap.add_argument("--version", action="version", version=f"crkit {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    def pqm(sp, required=True):
        sp.add_argument("-p", type=int, required=required)
        sp.add_argument("-q", type=int, required=required)
        sp.add_argument("-m", type=int, required=required)

    def out(sp, formats=("json", "csv", "pretty")):
        sp.add_argument("--format", choices=formats, default="json")
        sp.add_argument("-o", "--output", default=None)

    sp = sub.add_parser("orbits", help="per-orbit invariants for Gr_m(C^{p+q})")
    pqm(sp)
    out(sp)
    sp.add_argument("--levi", action="store_true", help="attach sampled pseudoconcavity estimates")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--samples", type=int, default=32)
    sp.set_defaults(func=cmd_orbits)

    sp = sub.add_parser("duality", help="dual pairs M+(a,b) / M-(a,b) with base-point certificates")
    pqm(sp)
    out(sp)
    sp.set_defaults(func=cmd_duality)

    sp = sub.add_parser("report", help="closed-form versus computed discrepancy report")
    pqm(sp)
    sp.add_argument("-o", "--output", default=None)
    sp.set_defaults(func=cmd_report)

    def alg_source(sp):
        sp.add_argument("--preset", default=None, help="grassmann:p,q,m,a,b")
        sp.add_argument("--v-spec", default=None, help="JSON {context:{p,q}, v_basis:[...]}")
        sp.add_argument("-p", type=int)
        sp.add_argument("-q", type=int)
        sp.add_argument("-m", type=int)
        sp.add_argument("-a", type=int)
        sp.add_argument("-b", type=int)
        sp.add_argument("-o", "--output", default=None)

    sp = sub.add_parser("check", help="n-reductivity, HNR and Levi data of one CR algebra")
    alg_source(sp)
    sp.add_argument("--n-reductive", action="store_true")
    sp.add_argument("--hnr", action="store_true")
    sp.add_argument("--levi", action="store_true")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--samples", type=int, default=32)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("analyze", help="structure of a matrix Lie algebra")
    sp.add_argument("--v-spec", required=True, help="JSON {ambient_n, basis:[...]}")
    sp.add_argument("-o", "--output", default=None)
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("mostow-probe", help="Jacobian rank probe of the Mostow map")
    alg_source(sp)
    sp.add_argument("--radius", type=float, default=0.5)
    sp.add_argument("--samples", type=int, default=100)
    sp.add_argument("--seed", type=int, default=42)
    sp.set_defaults(func=cmd_mostow)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse already printed its message; map its status 2 to ours
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return ns.func(ns)
    except (InternalConsistencyError, InternalCheckError) as exc:
        print(f"crkit: internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (UsageError, InvalidParameters, NotSubalgebraError, InconsistentAlgebraError, PreconditionError, ValueError) as exc:
        msg = str(exc).splitlines()[0] if str(exc) else type(exc).__name__
        print(f"crkit: {msg}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
