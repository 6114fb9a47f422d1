"""
Command-line front end.

    schubgysin straighten --k 0,2
    schubgysin lr --alpha 2,1 --beta 1 --gamma 1,1
    schubgysin push --n 4 --d 2 --map varpi --lambda 1 --schur 2,1
    schubgysin giambelli --n 4 --d 2 --lambda 1 --form schur --check
    schubgysin verify --suite quick --seed 7

Partitions are comma-separated integers; ``0`` or the empty string is the
empty partition. Tuples that start with a minus sign must be attached with
``=`` (``--alpha=-1,2``). Exit status: 0 success, 1 an identity check
failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Dict, List, Optional, Sequence, Tuple

from . import __version__
from . import identities as I
from . import partitions as P
from . import verify as V
from .chow import FlagContext, TruncationError, class_to_json, to_schur_u_form
from .gysin import (
    pi_pushforward,
    pi_pushforward_schur,
    pi_pushforward_via_schur,
    theta_pushforward,
    theta_pushforward_iterative,
    theta_pushforward_schur,
    varpi_pushforward,
    varpi_pushforward_schur,
)
from .polyring import NotSymmetricError, Poly, expansion_to_json, schur_expand
from .tableaux import lr_coefficient, lr_product

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    """Bad command-line input; reported with exit status 2."""


# -- parsing -------------------------------------------------------------------------


def parse_tuple(text: str, what: str = "tuple") -> Tuple[int, ...]:
    text = text.strip()
    if text in ("", "0"):
        return ()
    try:
        return tuple(int(piece) for piece in text.split(","))
    except ValueError:
        raise InputError(f"malformed {what} '{text}': expected comma-separated integers") from None


def parse_partition(text: str, what: str = "partition") -> Tuple[int, ...]:
    values = parse_tuple(text, what)
    if not P.is_partition(values):
        raise InputError(f"malformed {what} '{text}': parts must be nonnegative and weakly decreasing")
    return P.normalize(values)


def make_context(args) -> FlagContext:
    if args.n is None or args.d is None:
        raise InputError("--n and --d are required")
    if args.d > args.n:
        raise InputError(f"d={args.d} exceeds n={args.n}")
    if args.d < 1:
        raise InputError(f"d={args.d} must be at least 1")
    max_degree = args.max_degree
    if max_degree is None:
        return FlagContext.from_env(args.n, args.d)
    return FlagContext(args.n, args.d, max_degree)


def require_schubert(lam, ctx: FlagContext) -> Tuple[int, ...]:
    if not P.in_rectangle(lam, ctx.n, ctx.d):
        raise InputError(f"lambda={lam} is not contained in the rectangle ({ctx.codim})^{ctx.d}")
    return lam


def require_strict(mu, ctx: FlagContext) -> Tuple[int, ...]:
    if len(mu) != ctx.d or not P.is_strict(mu) or mu[-1] < 1:
        raise InputError(f"mu={mu} is not a strict partition with exactly d={ctx.d} positive parts")
    if mu[0] > ctx.n:
        raise InputError(f"mu={mu} has a part larger than n={ctx.n}")
    return mu


def require_rows(alpha, rows: int, name: str) -> Tuple[int, ...]:
    if len(alpha) > rows:
        raise InputError(f"{name}={alpha} has more than {rows} parts")
    return alpha


def load_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read JSON from {path}: {exc}") from None


def load_poly(path: str, nvars: Optional[int] = None) -> Poly:
    obj = load_json(path)
    if isinstance(obj, dict) and "terms" in obj:
        obj = obj["terms"]
    try:
        return Poly.from_json(obj, nvars)
    except (TypeError, ValueError, KeyError) as exc:
        raise InputError(f"malformed polynomial in {path}: {exc}") from None


# -- rendering -----------------------------------------------------------------------


def fmt_partition(alpha: Sequence[int]) -> str:
    return "(" + ",".join(map(str, alpha)) + ")" if alpha else "()"


def latex_name(name: str) -> str:
    return f"{name[0]}_{{{name[1:]}}}"


def latex_poly(p: Poly, names: Sequence[str]) -> str:
    if not p:
        return "0"
    pieces = []
    for e, c in sorted(p.terms(), key=lambda ec: (-sum(ec[0]), [-x for x in ec[0]])):
        mono = " ".join(latex_name(names[i]) + (f"^{{{k}}}" if k > 1 else "") for i, k in enumerate(e) if k)
        mag = abs(c)
        body = mono if mono and mag == 1 else (f"{mag} {mono}".strip())
        pieces.append(("-" if c < 0 else "+") + " " + body)
    out = " ".join(pieces)
    return out[2:] if out.startswith("+ ") else out


def latex_schur_form(form: Dict[Tuple[int, ...], Poly], names: Sequence[str], space: str = "U") -> str:
    if not form:
        return "0"
    parts = []
    for beta, coeff in form.items():
        label = ",".join(map(str, beta)) or r"\varnothing"
        s = f"s_{{{label}}}({space})"
        if coeff == 1:
            parts.append(s)
        else:
            parts.append(rf"\left({latex_poly(coeff, names)}\right) {s}")
    return " + ".join(parts)


class Output:
    """Collects one result and writes it in the requested format."""

    def __init__(self, fmt: str, path: Optional[str]):
        self.fmt = fmt
        self.path = path

    def emit(self, plain: str, payload, latex: Optional[str] = None):
        if self.fmt == "json":
            text = json.dumps(payload, sort_keys=True, indent=1)
        elif self.fmt == "latex":
            text = latex if latex is not None else plain
        else:
            text = plain
        _write(self, text)


# -- subcommands ---------------------------------------------------------------------


def cmd_straighten(args, out: Output) -> int:
    K = parse_tuple(args.k, "tuple K")
    res = P.straighten(K)
    if res is None:
        plain = "zero"
        latex = "0"
    else:
        plain = f"{res.sign:+d} {fmt_partition(res.shape)}"
        label = ",".join(map(str, res.shape)) or r"\varnothing"
        latex = ("-" if res.sign < 0 else "") + f"s_{{{label}}}"
    out.emit(plain, {"K": list(K), "straightening": P.straightening_to_json(res)}, latex)
    return EXIT_OK


def cmd_lr(args, out: Output) -> int:
    alpha = parse_partition(args.alpha, "partition alpha")
    beta = parse_partition(args.beta, "partition beta")
    if args.gamma is not None:
        gamma = parse_partition(args.gamma, "partition gamma")
        c = lr_coefficient(alpha, beta, gamma)
        out.emit(str(c), {"alpha": list(alpha), "beta": list(beta), "gamma": list(gamma), "coefficient": c},
                 f"c^{{{fmt_partition(alpha)}}}_{{{fmt_partition(beta)},{fmt_partition(gamma)}}} = {c}")
        return EXIT_OK
    # no gamma: the product s_alpha s_beta in d rows
    d = args.d if args.d is not None else len(alpha) + len(beta)
    if d < 1:
        d = 1
    product = lr_product(alpha, beta, d)
    plain = "\n".join(f"{fmt_partition(g)} {c}" for g, c in product.items()) or "0"
    latex = " + ".join((f"{c} " if c != 1 else "") + f"s_{{{','.join(map(str, g)) or chr(92) + 'varnothing'}}}"
                       for g, c in product.items()) or "0"
    out.emit(plain, {"alpha": list(alpha), "beta": list(beta), "d": d, "product": expansion_to_json(product)}, latex)
    return EXIT_OK


def cmd_schur_expand(args, out: Output) -> int:
    p = load_poly(args.poly, args.d)
    try:
        expansion = schur_expand(p, p.nvars)
    except NotSymmetricError as exc:
        raise InputError(f"cannot expand: {exc}") from None
    plain = "\n".join(f"{fmt_partition(a)} {c}" for a, c in expansion.items()) or "0"
    latex = " + ".join(f"{c} s_{{{','.join(map(str, a)) or chr(92) + 'varnothing'}}}" for a, c in expansion.items()) or "0"
    out.emit(plain, {"d": p.nvars, "expansion": expansion_to_json(expansion)}, latex)
    return EXIT_OK


def _emit_class(out: Output, ctx: FlagContext, cls: Poly, payload: dict, label: str = "",
                check: Optional[bool] = None) -> None:
    names = ctx.var_names()
    payload = dict(payload, n=ctx.n, d=ctx.d, **{"class": class_to_json(cls, ctx)})
    if ctx.is_base_class(cls):
        latex = latex_poly(cls, names)
    else:
        latex = latex_schur_form(to_schur_u_form(cls, ctx), names)
    plain = cls.pretty(names)
    if check is not None:
        plain += "\ncheck: " + ("PASS" if check else "FAIL")
    out.emit(plain, payload, (label + " = " if label else "") + latex)


def cmd_push(args, out: Output) -> int:
    ctx = make_context(args)
    if (args.schur is None) == (args.poly is None):
        raise InputError("give exactly one of --schur or --poly")
    alpha = None
    if args.schur is not None:
        alpha = require_rows(parse_partition(args.schur, "partition alpha"), ctx.d, "alpha")
        f = {alpha: 1}
    else:
        f = load_poly(args.poly)
        if f.nvars not in (ctx.d, ctx.nvars):
            raise InputError(f"polynomial has {f.nvars} variables; expected d={ctx.d} or n+d={ctx.nvars}")
    method = args.method
    payload: dict = {"map": args.map, "method": method}
    try:
        if args.map == "theta":
            if args.mu is None:
                raise InputError("--map theta needs --mu")
            mu = require_strict(parse_tuple(args.mu, "partition mu"), ctx)
            payload["mu"] = list(mu)
            methods = {
                "extract": lambda: theta_pushforward(mu, f, ctx),
                "det": (lambda: theta_pushforward_schur(mu, alpha, ctx)) if alpha is not None else None,
                "iterative": lambda: theta_pushforward_iterative(mu, f, ctx),
            }
        elif args.map == "varpi":
            if args.lam is None:
                raise InputError("--map varpi needs --lambda")
            lam = require_schubert(parse_partition(args.lam, "partition lambda"), ctx)
            payload["lambda"] = list(lam)
            methods = {
                "extract": lambda: varpi_pushforward(lam, f, ctx),
                "det": (lambda: varpi_pushforward_schur(lam, alpha, ctx)) if alpha is not None else None,
                "iterative": lambda: theta_pushforward_iterative(P.nu_of_lambda(lam, ctx.n, ctx.d), f, ctx),
            }
        else:
            methods = {
                "extract": lambda: pi_pushforward(f, ctx),
                "det": (lambda: pi_pushforward_schur(alpha, ctx)) if alpha is not None else (lambda: pi_pushforward_via_schur(f, ctx)),
                "iterative": lambda: theta_pushforward_iterative(P.nu_of_lambda((), ctx.n, ctx.d), f, ctx),
            }
        if methods.get(method) is None:
            raise InputError(f"method '{method}' needs --schur input")
        value = methods[method]()
        status = EXIT_OK
        if args.check:
            values = {name: fn() for name, fn in methods.items() if fn is not None}
            agree = all(v == value for v in values.values())
            payload["check"] = {name: v == value for name, v in values.items()}
            status = EXIT_OK if agree else EXIT_FAIL
    except NotSymmetricError as exc:
        raise InputError(f"input is not symmetric: {exc}") from None
    if alpha is not None:
        payload["alpha"] = list(alpha)
    _emit_class(out, ctx, value, payload, check=(status == EXIT_OK) if args.check else None)
    return status


def _partition_pair(args, ctx: FlagContext, beta_rows: int):
    alpha = require_rows(parse_partition(args.alpha, "partition alpha"), ctx.d, "alpha")
    beta = require_rows(parse_partition(args.beta, "partition beta"), beta_rows, "beta")
    return alpha, beta


def cmd_duality(args, out: Output) -> int:
    ctx = make_context(args)
    alpha, beta = _partition_pair(args, ctx, ctx.d)
    ell = args.ell
    if ell is not None and ell < P.pad(beta, ctx.d)[0]:
        raise InputError(f"ell={ell} is smaller than beta_1={beta[0]}")
    value = I.duality_pushforward(alpha, beta, ctx, ell)
    payload = {"alpha": list(alpha), "beta": list(beta), "ell": ell}
    status = EXIT_OK
    if args.check:
        ok = value == I.duality_oracle(alpha, beta, ctx)
        payload["check"] = {"lr_oracle": ok}
        status = EXIT_OK if ok else EXIT_FAIL
    _emit_class(out, ctx, value, payload, r"\pi_*(s_{%s}(U)s_{%s}(U))" % (fmt_partition(alpha), fmt_partition(beta)),
                (status == EXIT_OK) if args.check else None)
    return status


def cmd_jlp(args, out: Output) -> int:
    ctx = make_context(args)
    alpha, beta = _partition_pair(args, ctx, ctx.codim)
    value = I.jlp_pushforward(alpha, beta, ctx)
    payload = {"alpha": list(alpha), "beta": list(beta), "index": list(I.jlp_index(alpha, beta, ctx))}
    status = EXIT_OK
    if args.check:
        checks = {
            "full_determinant": I.jlp_pushforward(alpha, beta, ctx, shortcut=False) == value,
            "alternating_sum": I.jlp_sum(alpha, beta, ctx) == value,
            "sign_bridge": I.jlp_sign_bridge(alpha, beta, ctx) == value,
            "direct": I.jlp_oracle(alpha, beta, ctx) == value,
        }
        payload["check"] = checks
        status = EXIT_OK if all(checks.values()) else EXIT_FAIL
    _emit_class(out, ctx, value, payload, r"\pi_*(s_{%s}(U)s_{%s}(Q))" % (fmt_partition(alpha), fmt_partition(beta)),
                (status == EXIT_OK) if args.check else None)
    return status


def cmd_laplace(args, out: Output) -> int:
    ctx = make_context(args)
    alpha = parse_tuple(args.alpha, "tuple alpha")
    beta = parse_tuple(args.beta, "tuple beta")
    alpha = alpha if alpha else (0,) * ctx.d
    beta = beta if beta else (0,) * ctx.codim
    if len(alpha) != ctx.d or len(beta) != ctx.codim:
        raise InputError(f"alpha needs {ctx.d} entries and beta {ctx.codim}; got {len(alpha)} and {len(beta)}")
    report = I.laplace_expand_check(alpha, beta, ctx)
    ok = report["equal"] and report["complement_law"]
    names = ctx.var_names()
    payload = {"alpha": list(alpha), "beta": list(beta), "n": ctx.n, "d": ctx.d,
               "lhs": class_to_json(report["lhs"], ctx), "rhs": class_to_json(report["rhs"], ctx),
               "equal": report["equal"], "complement_law": report["complement_law"]}
    plain = (f"lhs: {report['lhs'].pretty(names)}\nrhs: {report['rhs'].pretty(names)}\n"
             f"laplace: {'PASS' if ok else 'FAIL'}")
    latex = latex_poly(report["lhs"], names) + (" = " if report["equal"] else r" \neq ") + latex_poly(report["rhs"], names)
    out.emit(plain, payload, latex)
    return EXIT_OK if ok else EXIT_FAIL


def _latex_det(lam, ctx: FlagContext) -> str:
    nu = P.nu_of_lambda(lam, ctx.n, ctx.d)
    lp = P.pad(lam, ctx.d)
    rows = []
    for i in range(ctx.d):
        entries = []
        for j in range(ctx.d):
            k = lp[i] - i + j
            entries.append("0" if k < 0 else "1" if k == 0 else f"c_{{{k}}}(Q - E_{{{nu[ctx.d - 1 - i]}}})")
        rows.append(" & ".join(entries))
    return r"\det\begin{pmatrix}" + r" \\ ".join(rows) + r"\end{pmatrix}"


def cmd_giambelli(args, out: Output) -> int:
    ctx = make_context(args)
    lam = require_schubert(parse_partition(args.lam, "partition lambda"), ctx)
    try:
        g = I.giambelli_class(lam, ctx)
    except I.GiambelliInconsistency as exc:
        sys.stderr.write(f"inconsistent: {exc}\n")
        return EXIT_FAIL
    names = ctx.var_names()
    payload = g.to_json()
    lines: List[str] = []
    latex: List[str] = []
    label = r"[\Omega_{%s}]" % fmt_partition(lam)
    if args.form in ("schur", "both"):
        for beta, coeff in g.schur_form.items():
            lines.append(f"{fmt_partition(beta)}: {coeff.pretty(names)}")
        latex.append(label + " = " + latex_schur_form(g.schur_form, names))
    if args.form in ("det", "both"):
        lines.append(f"det: {g.det_form.pretty(names)}")
        latex.append(label + " = " + _latex_det(lam, ctx) + " = " + latex_poly(g.det_form, names))
    status = EXIT_OK
    if args.check:
        report = I.giambelli_system_check(lam, ctx)
        payload["system"] = {"pass": report["pass"], "equations": report["equations"],
                             "failing": [list(a) for a in report["failing"]],
                             "diagonal_is_one": report["diagonal_is_one"],
                             "zero_outside_containment": report["zero_outside_containment"]}
        lines.append("system: " + ("PASS" if report["pass"] else "FAIL"))
        status = EXIT_OK if report["pass"] else EXIT_FAIL
    out.emit("\n".join(lines), payload, "\n".join(latex))
    return status


def cmd_verify(args, out: Output) -> int:
    try:
        report = V.run(args.suite, seed=args.seed, jobs=args.jobs)
    except KeyError:
        raise InputError(f"unknown suite '{args.suite}'; choose from quick, all, {', '.join(V.SUITES)} or an identity name") from None
    if out.fmt == "json":
        text = report.dumps()
    else:
        rows = [f"{name:26s} pass={c['pass']:5d} fail={c['fail']:3d}" for name, c in report.summary().items()]
        rows.append("verify: " + ("PASS" if report.passed else "FAIL"))
        for r in report.results:
            if not r["pass"]:
                rows.append(f"FAIL {r['identity']} {json.dumps(r['instance'], sort_keys=True)} {json.dumps(r['witness'], sort_keys=True)}")
        text = "\n".join(rows)
    _write(out, text)
    return EXIT_OK if report.passed else EXIT_FAIL


def _write(out: Output, text: str) -> None:
    text = text.rstrip("\n") + "\n"
    if out.path:
        with open(out.path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- argument parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("plain", "json", "latex"), default=None)
    common.add_argument("--out", help="write the result to this file")

    ctx_opts = argparse.ArgumentParser(add_help=False)
    ctx_opts.add_argument("--n", type=int, help="rank of E")
    ctx_opts.add_argument("--d", type=int, help="rank of U")
    ctx_opts.add_argument("--max-degree", type=int, dest="max_degree",
                          help="degree cap (default: none, or $SCHUBGYSIN_MAX_DEGREE)")

    parser = argparse.ArgumentParser(prog="schubgysin", description="Gysin maps and Schubert classes on Grassmann bundles.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("straighten", parents=[common], help="straighten an integer tuple")
    p.add_argument("--k", required=True)
    p.set_defaults(func=cmd_straighten)

    p = sub.add_parser("lr", parents=[common], help="Littlewood-Richardson coefficient c^alpha_{beta,gamma}")
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    p.add_argument("--gamma")
    p.add_argument("--d", type=int, help="row bound for the product when --gamma is omitted")
    p.set_defaults(func=cmd_lr)

    p = sub.add_parser("schur-expand", parents=[common], help="expand a symmetric polynomial (JSON file) in Schur polynomials")
    p.add_argument("--poly", required=True, help="JSON file, or - for stdin")
    p.add_argument("--d", type=int)
    p.set_defaults(func=cmd_schur_expand)

    p = sub.add_parser("push", parents=[common, ctx_opts], help="push a class in U down to the base")
    p.add_argument("--map", choices=("theta", "varpi", "pi"), required=True)
    p.add_argument("--mu")
    p.add_argument("--lambda", dest="lam")
    p.add_argument("--schur")
    p.add_argument("--poly")
    p.add_argument("--method", choices=("extract", "det", "iterative"), default="extract")
    p.add_argument("--check", action="store_true", help="compare every available method")
    p.set_defaults(func=cmd_push)

    p = sub.add_parser("duality", parents=[common, ctx_opts], help="pi_*(s_alpha(U) s_beta(U))")
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    p.add_argument("--ell", type=int)
    p.add_argument("--check", action="store_true")
    p.set_defaults(func=cmd_duality)

    p = sub.add_parser("jlp", parents=[common, ctx_opts], help="pi_*(s_alpha(U) s_beta(Q))")
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    p.add_argument("--check", action="store_true")
    p.set_defaults(func=cmd_jlp)

    p = sub.add_parser("laplace-check", parents=[common, ctx_opts], help="Laplace expansion of s_{alpha ⊔ beta}(E)")
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    p.set_defaults(func=cmd_laplace)

    p = sub.add_parser("giambelli", parents=[common, ctx_opts], help="class of a Schubert bundle")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--form", choices=("schur", "det", "both"), default="both")
    p.add_argument("--check", action="store_true", help="verify the triangular system")
    p.set_defaults(func=cmd_giambelli)

    p = sub.add_parser("verify", parents=[common], help="run the verification sweeps")
    p.add_argument("--suite", default="quick")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    fmt = args.format or ("json" if args.command == "verify" else "plain")
    out = Output(fmt, args.out)
    try:
        return args.func(args, out)
    except InputError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    except (ValueError, TruncationError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())
