"""Command-line front end.

Forms are given as positional arguments or on stdin (one per line, or a JSON
payload ``{"n": 3, "generators": ["x1^2", ...]}``). Results go to stdout as
text or JSON with a ``"schema": "assocform/1"`` key; errors go to stderr as
JSON. Exit codes: 0 success, 1 malformed input, 2 domain error, 3 a suite
criterion failed.
"""

from __future__ import annotations

import argparse
import io
import json
import os
import sys
from contextlib import redirect_stderr, redirect_stdout
from typing import Sequence

from .apolarity import perp
from .artinian import (
    GradedIdeal,
    a_gr,
    apolar_ideal_generators,
    associated_form,
    associated_form_json,
    associated_form_sequence,
    dumps,
    gradient_point,
    is_regular_sequence,
    spans_regular_sequence,
    subspace_json,
    wnd_quotient_dim,
)
from .errors import AssocFormError, DomainError, NonRegularSequenceError, ParseError, StructuralError
from .geometry import (
    ProjectivePoint,
    is_ordinary_double_point,
    is_smooth,
    make_example,
    multiplicity_at,
    veronese_multiplicity_check,
    verify_zk_membership,
)
from .git_stability import (
    OneParamSubgroup,
    barycenter_weights,
    ds_kernel,
    lambda_limit,
    limit_subspace,
    one_ps_ds_certificate,
    torus_destabilizes,
    torus_semistable,
    weight_and_init,
)
from .poly_core import D, S, GradedSubspace, HomogeneousForm, format_form, parse_form, span
from .suites import DEFAULT_SEED, run_suite

SCHEMA = "assocform/1"
SEED_ENV = "ASSOCFORM_SEED"

EXIT_OK, EXIT_STRUCTURAL, EXIT_DOMAIN, EXIT_SUITE_FAILED = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit with status 2
        raise ParseError(message)


# --- input handling -----------------------------------------------------------


def _read_payload(args: argparse.Namespace, stdin: io.TextIOBase) -> tuple[list[str], int | None]:
    texts = list(args.forms)
    n = args.n
    if texts:
        return texts, n
    raw = stdin.read().strip()
    if not raw:
        raise ParseError("no forms given on the command line or stdin")
    if raw.startswith("{"):
        try:
            payload = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad JSON payload: {exc}") from exc
        for key in ("generators", "forms", "form"):
            if key in payload:
                val = payload[key]
                texts = [val] if isinstance(val, str) else list(val)
                break
        else:
            raise ParseError("JSON payload needs a 'generators', 'forms' or 'form' key")
        if n is None:
            n = payload.get("n")
        elif payload.get("n") not in (None, n):
            raise StructuralError(f"--n {n} disagrees with payload n={payload['n']}")
        return texts, n
    return [line for line in raw.splitlines() if line.strip()], n


def _forms(args: argparse.Namespace, stdin: io.TextIOBase, ring: str | None = S) -> list[HomogeneousForm]:
    texts, n = _read_payload(args, stdin)
    if n is None:
        raise StructuralError("the number of variables must be given with --n")
    if not isinstance(n, int) or n < 1:
        raise StructuralError(f"bad variable count {n!r}")
    return [parse_form(t, n, ring) for t in texts]


def _one_form(args: argparse.Namespace, stdin: io.TextIOBase, ring: str | None = S) -> HomogeneousForm:
    forms = _forms(args, stdin, ring)
    if len(forms) != 1:
        raise StructuralError(f"expected one form, got {len(forms)}")
    return forms[0]


def _subspace(forms: list[HomogeneousForm]) -> GradedSubspace:
    if len({(f.ring, f.degree) for f in forms}) != 1:
        raise StructuralError("subspace generators must share ring and degree")
    return span(forms)


def _lambda(text: str, n: int) -> OneParamSubgroup:
    lam = OneParamSubgroup.parse(text)
    if lam.n != n:
        raise StructuralError(f"lambda has {lam.n} weights, expected {n}")
    return lam


# --- output helpers ------------------------------------------------------------


class Output:
    def __init__(self, fmt: str, stream):
        self.fmt = fmt
        self.stream = stream

    def emit(self, text_lines: Sequence[str], payload: dict) -> None:
        if self.fmt == "json":
            self.stream.write(dumps({"schema": SCHEMA, **payload}) + "\n")
        else:
            for line in text_lines:
                self.stream.write(line + "\n")


def _basis_lines(W: GradedSubspace) -> list[str]:
    return [format_form(F) for F in W.forms()] or ["0"]


def _subspace_payload(W: GradedSubspace) -> dict:
    out = subspace_json(W)
    out.pop("schema")
    return out


def _bool(b: bool) -> str:
    return "true" if b else "false"


# --- commands -------------------------------------------------------------------


def cmd_assoc(args, stdin, out: Output) -> int:
    f = _one_form(args, stdin, S)
    A = associated_form(f)
    payload = associated_form_json(f)
    payload.pop("schema")
    out.emit([format_form(A)], payload)
    return EXIT_OK


def cmd_assoc_seq(args, stdin, out: Output) -> int:
    gens = _forms(args, stdin, S)
    A = associated_form_sequence(gens)
    payload = associated_form_json(gens)
    payload.pop("schema")
    out.emit([format_form(A)], payload)
    return EXIT_OK


def cmd_agr(args, stdin, out: Output) -> int:
    forms = _forms(args, stdin, S)
    if args.gradient:
        if len(forms) != 1:
            raise StructuralError("--gradient takes a single form")
        forms = forms[0].gradient()
    U = _subspace(forms)
    W = a_gr(U)
    payload = _subspace_payload(W)
    payload["quotient_dim"] = wnd_quotient_dim(U)
    payload["regular_sequence"] = spans_regular_sequence(W)
    out.emit(_basis_lines(W), payload)
    return EXIT_OK


def cmd_hilb(args, stdin, out: Output) -> int:
    gens = _forms(args, stdin, S)
    ideal = GradedIdeal(gens)
    t_max = args.tmax
    if t_max is None:
        t_max = sum(g.degree - 1 for g in gens) + 1
    h = ideal.hilbert_function(t_max)
    out.emit([" ".join(str(v) for v in h)], {"hilbert_function": h, "t_max": t_max})
    return EXIT_OK


def cmd_gradient(args, stdin, out: Output) -> int:
    F = _one_form(args, stdin, None)
    W = gradient_point(F, args.order)
    payload = _subspace_payload(W)
    payload["order"] = args.order
    out.emit(_basis_lines(W), payload)
    return EXIT_OK


def cmd_dual_check(args, stdin, out: Output) -> int:
    gens = _forms(args, stdin, S)
    check = is_regular_sequence(gens)
    if not check.is_regular:
        raise NonRegularSequenceError()
    nu = check.socle_degree
    ideal = GradedIdeal(gens)
    F = ideal.inverse_system(nu)
    orders = [args.order] if args.order is not None else list(range(nu + 1))
    rows = []
    for p in orders:
        if not 0 <= p <= nu:
            raise StructuralError(f"order {p} outside 0..{nu}")
        rows.append((p, perp(gradient_point(F, p)) == ideal.piece(nu - p).piece))
    ok = all(r for _, r in rows)
    out.emit(
        [f"inverse_system {format_form(F)}"] + [f"p={p} {_bool(r)}" for p, r in rows],
        {"inverse_system": format_form(F), "checks": [{"p": p, "holds": r} for p, r in rows], "ok": ok},
    )
    return EXIT_OK if ok else EXIT_DOMAIN


def cmd_ds_detect(args, stdin, out: Output) -> int:
    f = _one_form(args, stdin, S)
    rep = ds_kernel(f)
    verdict = "unknown" if rep.is_direct_sum is None else _bool(rep.is_direct_sum)
    lines = [f"k={rep.k}", f"direct_sum={verdict}", f"torus_dim={rep.torus_dim}", f"smooth={_bool(rep.smooth)}"]
    lines += ["kernel:"] + ["  " + s for s in _basis_lines(rep.kernel)]
    out.emit(
        lines,
        {
            "k": rep.k,
            "direct_sum": rep.is_direct_sum,
            "torus_dim": rep.torus_dim,
            "smooth": rep.smooth,
            "kernel": [format_form(g) for g in rep.kernel.forms()],
        },
    )
    return EXIT_OK


def cmd_stab(args, stdin, out: Output) -> int:
    f = _one_form(args, stdin, None)
    if args.lam is None:
        semi = torus_semistable(f)
        mu = barycenter_weights(f) if semi else None
        lines = ["semistable" if semi else "unstable"]
        payload: dict = {"torus_semistable": semi}
        if mu is not None:
            payload["barycenter_weights"] = [str(x) for x in mu]
        out.emit(lines, payload)
        return EXIT_OK
    lam = _lambda(args.lam, f.n)
    w, init = weight_and_init(f, lam)
    lim = lambda_limit(f, lam)
    lines = [f"weight={w}", f"init={format_form(init)}", f"limit={'none' if lim is None else format_form(lim)}"]
    payload = {"weight": w, "init": format_form(init), "limit": None if lim is None else format_form(lim)}
    if not lam.trivial:
        dest = torus_destabilizes(f, lam)
        lines.append(f"destabilizes={_bool(dest)}")
        payload["destabilizes"] = dest
        if f.ring == S and f.degree >= 2:
            cert = one_ps_ds_certificate(f, lam)
            split = None if cert is None else [[i + 1 for i in cert[0]], [i + 1 for i in cert[1]]]
            lines.append("ds_certificate=" + ("none" if split is None else f"{split[0]}|{split[1]}"))
            payload["ds_certificate"] = split
    out.emit(lines, payload)
    return EXIT_OK


def cmd_limit(args, stdin, out: Output) -> int:
    forms = _forms(args, stdin, None)
    lam = _lambda(args.lam, forms[0].n)
    if args.subspace or len(forms) > 1:
        V = limit_subspace(_subspace(forms), lam)
        out.emit(_basis_lines(V), _subspace_payload(V))
        return EXIT_OK
    lim = lambda_limit(forms[0], lam)
    text = "none" if lim is None else format_form(lim)
    out.emit([text], {"limit": None if lim is None else text, "exists": lim is not None})
    return EXIT_OK


def cmd_mult(args, stdin, out: Output) -> int:
    f = _one_form(args, stdin, None)
    p = ProjectivePoint.parse(args.point)
    if p.n != f.n:
        raise StructuralError(f"point has {p.n} coordinates, expected {f.n}")
    mu = multiplicity_at(f, p)
    lines = [f"multiplicity={mu}"]
    payload: dict = {"point": p.to_json(), "multiplicity": mu}
    if mu == 2:
        odp = is_ordinary_double_point(f, p)
        lines.append(f"ordinary_double_point={_bool(odp)}")
        payload["ordinary_double_point"] = odp
    if args.ell is not None:
        # read f as an inverse system and test the power-of-linear-form witnesses
        F = f.with_ring(D)
        ideal = GradedIdeal(apolar_ideal_generators(F))
        res = veronese_multiplicity_check(ideal, F.degree, p, args.ell)
        lines.append(
            f"power_in_ideal={_bool(res.power_in_ideal)} lower_power_in_ideal={_bool(res.lower_power_in_ideal)}"
        )
        payload["witness"] = {
            "ell": args.ell,
            "power_in_ideal": res.power_in_ideal,
            "lower_power_in_ideal": res.lower_power_in_ideal,
            "exact_multiplicity": res.exact_multiplicity,
        }
    out.emit(lines, payload)
    return EXIT_OK


def cmd_zk_verify(args, stdin, out: Output) -> int:
    forms = _forms(args, stdin, S)
    points = [ProjectivePoint.parse(s) for s in args.points.split(";") if s.strip()]
    cert = verify_zk_membership(_subspace(forms), points)
    lines = [f"{cert.status} {'ok' if cert.ok else 'failed'}"]
    lines += [f"  {name} {_bool(ok)}" for name, ok in cert.checks]
    out.emit(lines, cert.to_json())
    return EXIT_OK if cert.ok else EXIT_DOMAIN


def cmd_smooth(args, stdin, out: Output) -> int:
    f = _one_form(args, stdin, None)
    ok = is_smooth(f)
    out.emit([_bool(ok)], {"smooth": ok})
    return EXIT_OK


def cmd_example(args, stdin, out: Output) -> int:
    if args.n is None:
        raise StructuralError("the number of variables must be given with --n")
    g = parse_form(args.g, args.n, S) if args.g else None
    f = make_example(args.kind, args.n, d=args.d, m=args.m, k=args.k, g=g)
    out.emit([format_form(f)], {"form": format_form(f), "n": f.n, "degree": f.degree})
    return EXIT_OK


def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get(SEED_ENV)
    if env:
        try:
            return int(env)
        except ValueError as exc:
            raise StructuralError(f"{SEED_ENV}={env!r} is not an integer") from exc
    return DEFAULT_SEED


def cmd_suite(args, stdin, out: Output) -> int:
    seed = _seed(args)
    results = run_suite(args.name, seed)
    for r in results:
        sys.stderr.write(f"{r.key} {r.seconds:.2f}s\n")
    ok = all(r.passed for r in results)
    lines = [r.line() for r in results]
    lines.append(f"{sum(r.passed for r in results)}/{len(results)} passed (seed {seed})")
    out.emit(
        lines,
        {
            "suite": args.name,
            "seed": seed,
            "passed": ok,
            "results": [{"id": r.key, "title": r.title, "passed": r.passed, "detail": r.detail} for r in results],
        },
    )
    return EXIT_OK if ok else EXIT_SUITE_FAILED


# --- parser -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--n", type=int, help="number of variables")
    common.add_argument("--output", choices=["text", "json"], default="text")

    parser = _Parser(prog="assocform", description="Associated forms and apolarity over the rationals.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help_text, forms=True):
        p = sub.add_parser(name, parents=[common], help=help_text)
        if forms:
            p.add_argument("forms", nargs="*", help="forms, or read from stdin")
        p.set_defaults(fn=fn)
        return p

    add("assoc", cmd_assoc, "associated form A(f) of a form f")
    add("assoc-seq", cmd_assoc_seq, "inverse system of n forms of equal degree")
    add("agr", cmd_agr, "A_Gr of an n-dimensional subspace").add_argument(
        "--gradient", action="store_true", help="use the span of the partials of a single form"
    )
    add("hilb", cmd_hilb, "Hilbert function of S/I").add_argument("--tmax", type=int)
    add("gradient", cmd_gradient, "span of order-p partials").add_argument("--order", type=int, default=1)
    add("dual-check", cmd_dual_check, "gradient/Hilbert point duality for a regular sequence").add_argument(
        "--order", type=int
    )
    add("ds-detect", cmd_ds_detect, "direct-sum kernel of a form")
    add("stab", cmd_stab, "torus semistability, or weight data for --lambda").add_argument(
        "--lambda", dest="lam", help="comma-separated weights summing to zero"
    )
    p = add("limit", cmd_limit, "limit of a form or subspace under a 1-PS")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--subspace", action="store_true", help="treat the forms as spanning a subspace")
    p = add("mult", cmd_mult, "multiplicity of a hypersurface at a point")
    p.add_argument("--point", required=True, help="comma-separated coordinates")
    p.add_argument("--ell", type=int, help="also run the linear-power witness check for this l")
    add("zk-verify", cmd_zk_verify, "certify the base locus of a subspace").add_argument(
        "--points", required=True, help="points separated by ';'"
    )
    add("smooth", cmd_smooth, "smoothness of a hypersurface")
    p = add("example", cmd_example, "example forms", forms=False)
    p.add_argument("kind", choices=["fermat", "partial-fermat", "nodal"])
    for flag in ("--d", "--m", "--k"):
        p.add_argument(flag, type=int)
    p.add_argument("--g", help="residual form for partial-fermat")
    p = add("suite", cmd_suite, "run the acceptance or property suite", forms=False)
    p.add_argument("name", choices=["acceptance", "properties"])
    p.add_argument("--seed", type=int)
    return parser


def _error_json(exc: AssocFormError) -> str:
    return dumps({"schema": SCHEMA, "error": {"code": exc.code, "message": str(exc)}}) + "\n"


def main(argv: Sequence[str] | None = None, stdin=None) -> int:
    stdin = sys.stdin if stdin is None else stdin
    try:
        args = build_parser().parse_args(argv)
        return args.fn(args, stdin, Output(args.output, sys.stdout))
    except DomainError as exc:
        sys.stderr.write(_error_json(exc))
        return EXIT_DOMAIN
    except StructuralError as exc:
        sys.stderr.write(_error_json(exc))
        return EXIT_STRUCTURAL
    except ZeroDivisionError as exc:
        sys.stderr.write(_error_json(ParseError(f"division by zero: {exc}")))
        return EXIT_STRUCTURAL


def run(argv: Sequence[str], stdin_text: str = "") -> tuple[int, str, str]:
    """Run the CLI in-process and capture ``(exit code, stdout, stderr)``."""
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        try:
            code = main(list(argv), io.StringIO(stdin_text))
        except SystemExit as exc:  # --help
            code = exc.code if isinstance(exc.code, int) else 0
    return code, out.getvalue(), err.getvalue()


if __name__ == "__main__":
    sys.exit(main())
