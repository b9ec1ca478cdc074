"""Command-line front end.

Exit codes: 0 success, 1 failed check, 2 usage error, 3 budget or genericity error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from typing import Sequence

from . import dt as dt_engine
from .coha import presentation, shuffle
from .coha.symmetric import SymElement, basis, dim_component
from .errors import (BudgetError, ConsistencyError, GenericityError, QuiverDTError,
                     SymmetryError)
from .oracle import count_semistable, stacky_count_from_series
from .quiver import Quiver, box_vectors, loop_quiver, parse_slope, slope
from .ratfunc import HalfPowerRational, format_ratfunc


class UsageError(QuiverDTError):
    kind = "usage"


# parsing

def parse_ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def quiver_from_json(doc: dict) -> Quiver:
    if not isinstance(doc, dict) or "arrows" not in doc:
        raise UsageError("quiver document needs an 'arrows' matrix")
    return Quiver(tuple(tuple(row) for row in doc["arrows"]), tuple(doc.get("vertices", ())))


def quiver_to_json(Q: Quiver) -> dict:
    return {"vertices": list(Q.vertices), "arrows": [list(row) for row in Q.arrows]}


def load_quiver(source: str | None, loops: int | None) -> Quiver:
    if source is None:
        if loops is None:
            raise UsageError("give --quiver or --m")
        return loop_quiver(loops)
    try:
        if source == "-":
            doc = json.load(sys.stdin)
        elif source.lstrip().startswith("{"):
            doc = json.loads(source)
        else:
            with open(source, encoding="utf-8") as fh:
                doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read quiver: {exc}") from None
    Q = quiver_from_json(doc)
    if loops is not None:
        if Q.n != 1:
            raise UsageError("--m only applies to one-vertex quivers")
        Q = Quiver(((loops,),), Q.vertices)
    return Q


_TERM = re.compile(r"\s*([+-])?\s*(?:([0-9]+(?:/[0-9]+)?)\s*\*\s*)?m\(([^)]*)\)\s*")


def parse_element(text: str) -> SymElement:
    """Parse ``D: TERMS`` such as ``2,2: 2*m(1,1|) - m(|2)``; ``1,1: m(|)`` is the unit."""
    if ":" not in text:
        raise UsageError("element must look like 'd: c*m(parts|parts) + ...'")
    head, body = text.split(":", 1)
    d = parse_ints(head)
    body = body.strip()
    if body in ("", "0"):
        return SymElement(d, 0)
    coeffs: dict = {}
    pos = 0
    degree = None
    while pos < len(body):
        m = _TERM.match(body, pos)
        if not m or m.end() == pos:
            raise UsageError(f"cannot parse element near {body[pos:]!r}")
        sign = -1 if m.group(1) == "-" else 1
        c = sign * Fraction(m.group(2) or 1)
        parts = m.group(3).split("|")
        if len(parts) != len(d):
            raise UsageError(f"m({m.group(3)}) needs {len(d)} vertex parts")
        lam = tuple(tuple(int(x) for x in p.split(",") if x.strip()) for p in parts)
        deg = sum(map(sum, lam))
        if degree is not None and deg != degree:
            raise UsageError("element must be homogeneous")
        degree = deg
        coeffs[lam] = coeffs.get(lam, 0) + c
        pos = m.end()
    return SymElement(d, degree, coeffs)


def format_element(f: SymElement) -> str:
    head = ",".join(map(str, f.d))
    if f.is_zero():
        return f"{head}: 0"
    terms = []
    for lam in basis(f.d, f.degree):
        c = f.coeffs.get(lam)
        if not c:
            continue
        mono = "m(" + "|".join(",".join(map(str, p)) for p in lam) + ")"
        mag = abs(c)
        body = mono if mag == 1 else f"{mag}*{mono}"
        terms.append(("-" if c < 0 else "+", body))
    s = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        s += f" {sign} {body}"
    return f"{head}: {s}"


def fmt_vec(d) -> str:
    return ",".join(map(str, d))


def q_poly_str(coeffs: Sequence[int]) -> str:
    return format_ratfunc(HalfPowerRational.from_laurent({2 * j: c for j, c in enumerate(coeffs) if c}))


# commands

def _theta(args, Q: Quiver) -> tuple[int, ...]:
    theta = parse_ints(args.theta) if args.theta else (0,) * Q.n
    if len(theta) == 1 and Q.n > 1 and theta == (0,):
        theta = (0,) * Q.n
    if len(theta) != Q.n:
        raise UsageError(f"stability needs {Q.n} entries")
    return theta


def _vec(Q: Quiver, text: str | None, name: str) -> tuple[int, ...]:
    if text is None:
        raise UsageError(f"--{name} is required")
    v = parse_ints(text)
    if len(v) != Q.n:
        raise UsageError(f"--{name} needs {Q.n} entries")
    return Q.check(v)


def _dt_row(r: dt_engine.DTResult, mu: Fraction) -> dict:
    return {"d": list(r.d), "slope": str(mu), "chi": r.chi,
            "omega_tilde": list(r.omega_tilde), "omega_tilde_str": q_poly_str(r.omega_tilde),
            "omegas": [list(p) for p in r.omegas]}


def cmd_dt(args, Q, theta):
    box = _vec(Q, args.box, "box")
    slopes = [parse_slope(args.slope)] if args.slope else dt_engine.realized_slopes(theta, box)
    rows = []
    for mu in sorted(slopes, reverse=True):
        for r in dt_engine.dt_tilde(Q, theta, mu, box):
            rows.append(_dt_row(r, mu))
    rows.sort(key=lambda row: (sum(row["d"]), row["d"]))
    text = []
    for row in rows:
        line = f"d={fmt_vec(row['d'])}: omega_tilde={row['omega_tilde_str']}"
        line += "".join(f"; Omega[k={k}]={v}" for k, v in row["omegas"])
        text.append(line)
    return 0, {"results": rows}, text


def cmd_series(args, Q, theta):
    box = _vec(Q, args.box, "box")
    if args.slope:
        mu = parse_slope(args.slope)
        s = dt_engine.semistable_series(Q, theta, mu, box)
        kind = f"semistable slope {mu}"
    else:
        s = dt_engine.series_a(Q, box)
        kind = "A"
    rows = [{"d": list(d), "coefficient": format_ratfunc(s[d])}
            for d in box_vectors(box) if s[d]]
    text = [f"# {kind}"] + [f"d={fmt_vec(r['d'])}: {r['coefficient']}" for r in rows]
    return 0, {"series": kind, "coefficients": rows}, text


def cmd_dims(args, Q, theta):
    d = _vec(Q, args.d, "d")
    if args.jmax is None or args.jmax < 0:
        raise UsageError("--jmax must be a non-negative integer")
    if args.command == "coha-dims":
        dims = [dim_component(d, j) for j in range(args.jmax + 1)]
    elif args.command == "sst-dims":
        dims = presentation.sst_presentation(Q, theta, d, args.jmax).dims()
    else:
        dims = presentation.st_presentation(Q, theta, d, args.jmax).dims()
    return 0, {"d": list(d), "dims": dims}, [" ".join(map(str, dims))]


def cmd_product(args, Q, theta):
    f, g = parse_element(args.left), parse_element(args.right)
    for x in (f, g):
        Q.check(x.d)
    prod = shuffle.shuffle_product(Q, f, g)
    doc = {"product": format_element(prod), "degree": prod.degree}
    text = [format_element(prod)]
    if args.reduce:
        pres = presentation.sst_presentation(Q, theta, prod.d, max(prod.degree, 0))
        if prod.degree >= 0:
            coords = pres.reduce(prod)
            complement = pres.complement(prod.degree)
        else:
            coords, complement = (), []
        cls = SymElement(prod.d, prod.degree, dict(zip(complement, coords)))
        doc["sst_class"] = format_element(cls)
        doc["sst_coordinates"] = [str(c) for c in coords]
        text.append("sst class: " + format_element(cls).split(": ", 1)[1])
    return 0, doc, text


def cmd_oracle(args, Q, theta):
    d = _vec(Q, args.d, "d")
    primes = parse_ints(args.primes)
    mu = slope(theta, d)
    coeff = dt_engine.semistable_series(Q, theta, mu, d)[d]
    rows, ok = [], True
    for p in primes:
        count = count_semistable(Q, theta, d, p)
        predicted = stacky_count_from_series(Q, d, coeff, p)
        ok &= predicted == count
        rows.append({"p": p, "count": count, "predicted": str(predicted), "ok": predicted == count})
    text = [f"p={r['p']}: count={r['count']} predicted={r['predicted']} "
            f"{'ok' if r['ok'] else 'MISMATCH'}" for r in rows]
    return (0 if ok else 1), {"d": list(d), "coefficient": format_ratfunc(coeff), "rows": rows}, text


def cmd_check(args, Q, theta):
    kind = args.kind
    details: dict = {}
    if kind == "wallcross":
        ok = dt_engine.wallcross_check(Q, theta, _vec(Q, args.box, "box"))
    elif kind == "tensor":
        ok = presentation.tensor_check(Q, theta, _vec(Q, args.d, "d"), args.jmax or 0)
    elif kind == "supercomm":
        ok = _supercomm(Q, _vec(Q, args.d, "d"), _vec(Q, args.e or args.d, "e"), args.jmax or 0)
    elif kind == "chowbetti":
        d = _vec(Q, args.d, "d")
        cb = presentation.chow_betti_dt(Q, theta, d, args.jmax)
        eng = dt_engine.dt_invariants(Q, theta, d)
        details = {"chow_betti": list(cb.omega_tilde), "engine": list(eng.omega_tilde)}
        ok = cb.omega_tilde == eng.omega_tilde
    else:
        ok = _positivity(Q, theta, _vec(Q, args.box, "box"), details)
    doc = {"check": kind, "ok": ok, **details}
    return (0 if ok else 1), doc, [f"{kind}: {'pass' if ok else 'FAIL'}"]


def _supercomm(Q, d, e, jmax) -> bool:
    if not Q.is_symmetric:
        raise SymmetryError("supercomm check needs a symmetric quiver")
    for a in range(jmax + 1):
        for b in range(jmax + 1):
            for lam in basis(d, a):
                for rho in basis(e, b):
                    f = SymElement.basis_element(d, lam)
                    g = SymElement.basis_element(e, rho)
                    if not (shuffle.twisted_commutativity_check(Q, f, g)
                            and shuffle.supercommutativity_check(Q, f, g)):
                        return False
    return True


def _positivity(Q, theta, box, details) -> bool:
    if not Q.is_symmetric:
        raise SymmetryError("positivity holds for symmetric quivers only")
    bad = []
    for mu in dt_engine.realized_slopes(theta, box):
        for r in dt_engine.dt_tilde(Q, theta, mu, box):
            for k, v in r.omegas:
                if v < 0 or not r.chi <= k <= 2 - r.chi:
                    bad.append([list(r.d), k, v])
    details["violations"] = bad
    return not bad


COMMANDS = {
    "dt": cmd_dt, "series": cmd_series, "coha-dims": cmd_dims, "sst-dims": cmd_dims,
    "st-dims": cmd_dims, "product": cmd_product, "oracle": cmd_oracle, "check": cmd_check,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quiverdt", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--quiver", help="JSON file, '-' for stdin, or an inline JSON object")
        p.add_argument("--m", type=int, help="number of loops (one-vertex quiver)")
        p.add_argument("--theta", help="stability weights, comma separated")
        p.add_argument("--format", choices=("text", "json"), default="text")
        return p

    p = common(sub.add_parser("dt", help="DT invariants for all d <= box"))
    p.add_argument("--box", required=True)
    p.add_argument("--slope", help="restrict to one slope, e.g. 1/2")
    p = common(sub.add_parser("series", help="A or a semistable series"))
    p.add_argument("--box", required=True)
    p.add_argument("--slope")
    for name in ("coha-dims", "sst-dims", "st-dims"):
        p = common(sub.add_parser(name, help=f"graded dimensions ({name})"))
        p.add_argument("--d", required=True)
        p.add_argument("--jmax", type=int, required=True)
    p = common(sub.add_parser("product", help="shuffle product of two elements"))
    p.add_argument("--left", required=True, help="e.g. '1,1: m(1|)'")
    p.add_argument("--right", required=True)
    p.add_argument("--reduce", action="store_true", help="also print the semistable class")
    p = common(sub.add_parser("oracle", help="finite-field count against the series"))
    p.add_argument("--d", required=True)
    p.add_argument("--primes", default="2,3")
    p = common(sub.add_parser("check", help="consistency checks"))
    p.add_argument("kind", choices=("wallcross", "tensor", "supercomm", "chowbetti", "positivity"))
    p.add_argument("--box")
    p.add_argument("--d")
    p.add_argument("--e")
    p.add_argument("--jmax", type=int)
    return parser


def _emit(doc: dict, text: list[str], fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    else:
        for line in text:
            out.write(line + "\n")


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        Q = load_quiver(args.quiver, args.m)
        theta = _theta(args, Q)
        code, doc, text = COMMANDS[args.command](args, Q, theta)
    except (BudgetError, GenericityError) as exc:
        err.write(f"error: {exc.kind}: {exc}\n")
        return 3
    except ConsistencyError as exc:
        err.write(f"error: {exc.kind}: {exc}\n")
        return 1
    except QuiverDTError as exc:
        err.write(f"error: {exc.kind}: {exc}\n")
        return 2
    doc = {"command": args.command, "quiver": quiver_to_json(Q), "theta": list(theta), **doc}
    _emit(doc, text, args.format, out)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
