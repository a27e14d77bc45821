"""Command-line interface.

Exit codes: 0 success, 2 formula/oracle mismatch, 64 usage or parse error,
65 hypothesis violation (or any other library error raised while computing).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .config import RunConfig, default_seed
from .criteria import (
    agrees,
    divisor_verdict,
    faithful_polydiff,
    has_hyperelliptic_involution,
    verdict_from_matrices,
)
from .curve import CurveAutomorphism, Divisor, HyperellipticModel, place_from_id
from .deformation import GroupRepresentation, check_groups_hypothesis, deformation_dim
from .differentials import action_on_polydiff, basis_polydiff, check_holomorphic, expected_size
from .errors import EquicurveError
from .goppa import auto_points, code_action, goppa_build, min_distance_bruteforce, rr_action_faithful
from .ramification import (
    InvariantDivisorSpec,
    RamificationProfile,
    concrete_divisor_spec,
    embed_automorphism,
    profile_from_curve,
)
from .rrspace import (
    action_on_rr,
    dimD_hypothesis,
    invariant_dim_concrete,
    invariant_dim_formula,
    invariant_dim_polydiff,
    rr_basis,
)
from .verify import default_group, group_shape, run_checks

EXIT_OK = 0
EXIT_MISMATCH = 2
EXIT_USAGE = 64
EXIT_HYPOTHESIS = 65
SCHEMA = 1


class UsageError(Exception):
    """Bad command line or malformed input file."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


# -- input --
def _read_json(path: str):
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON: {exc}") from None


def parse_curve(data) -> tuple[HyperellipticModel, list[CurveAutomorphism]]:
    """Model and group from curve JSON (the group defaults to the hyperelliptic involution)."""
    if not isinstance(data, dict):
        raise UsageError("curve JSON must be an object")
    try:
        p, k = int(data["p"]), int(data.get("k", 1))
        form = data.get("model", "char2" if "h" in data else "odd")
        f = [int(c) for c in data["f"]]
        h = [int(c) for c in data["h"]] if form == "char2" else None
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"malformed curve JSON: {exc!r}") from None
    if form not in ("odd", "char2"):
        raise UsageError(f"unknown model {form!r}")
    if form == "char2" and "h" not in data:
        raise UsageError("char2 model needs h")
    model = HyperellipticModel.from_ints(p, k, f, h)
    gens = data.get("group")
    if gens is not None and not isinstance(gens, list):
        raise UsageError("group must be a list of automorphisms")
    group = default_group(model, [CurveAutomorphism.from_json(model, g) for g in gens or []])
    return model, group


def parse_profile(data) -> tuple[RamificationProfile, dict]:
    if not isinstance(data, dict):
        raise UsageError("profile JSON must be an object")
    return RamificationProfile.from_json(data), data


def parse_spec(data) -> InvariantDivisorSpec:
    if not isinstance(data, dict):
        raise UsageError("divisor spec JSON must be an object")
    return InvariantDivisorSpec.from_json(data)


def _divisor(model, data) -> Divisor:
    return Divisor.from_json(model, data)


# -- output --
def emit(payload: dict, fmt: str, out=None) -> None:
    out = out or sys.stdout
    payload = {"schema": SCHEMA, **payload}
    if fmt == "table":
        for key in sorted(payload):
            value = payload[key]
            text = value if isinstance(value, str) else json.dumps(value, sort_keys=True)
            out.write(f"{key}: {text}\n")
    else:
        out.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")


def _matrices(action) -> list:
    return [M.to_lists() for M in action.matrices]


# -- commands --
def _load_source(args):
    if args.curve:
        model, group = parse_curve(_read_json(args.curve))
        return model, group, None, None
    prof, raw = parse_profile(_read_json(args.profile))
    return None, None, prof, raw


def _profile_spec(args, raw) -> InvariantDivisorSpec:
    if args.divisor:
        return parse_spec(_read_json(args.divisor))
    if "divisor" in raw:
        return parse_spec(raw["divisor"])
    raise UsageError("no divisor given (use --divisor or a 'divisor' key in the profile)")


def cmd_dims(args, cfg: RunConfig):
    model, group, prof, raw = _load_source(args)
    if model is None:
        if args.m is not None:
            return {"m": args.m, "total": expected_size(prof.g_X, args.m), "invariant": invariant_dim_polydiff(prof, args.m)}, EXIT_OK
        spec = _profile_spec(args, raw)
        out = {"degree": spec.degree(prof), "invariant": invariant_dim_formula(prof, spec, force=args.force)}
        if args.force and not dimD_hypothesis(prof, spec):
            out["outside_hypothesis"] = True
        return out, EXIT_OK
    if args.m is not None:
        prof = profile_from_curve(model, group)
        basis = basis_polydiff(model, args.m)
        inv = invariant_dim_concrete(action_on_polydiff(model, group, args.m, basis))
        formula = invariant_dim_polydiff(prof, args.m)
        total_formula = expected_size(model.genus, args.m)
        ok = inv == formula and len(basis) == total_formula
        out = {"m": args.m, "total": len(basis), "total_formula": total_formula, "invariant": formula, "invariant_oracle": inv, "agree": ok}
        return out, EXIT_OK if ok else EXIT_MISMATCH
    D = _divisor(model, _read_json(args.divisor))
    prof, spec, cover, bD = concrete_divisor_spec(model, group, D)
    rr = rr_basis(cover.model, bD, cfg)
    inv = invariant_dim_concrete(action_on_rr(cover.model, cover.group, rr))
    g = model.genus
    total_formula = D.degree + 1 - g if D.degree > 2 * g - 2 else None
    inside = dimD_hypothesis(prof, spec)
    formula = invariant_dim_formula(prof, spec, force=True) if inside or args.force else None
    # below the degree bound the forced value is informational and is not compared
    ok = (total_formula is None or total_formula == rr.dim) and (not inside or formula == inv)
    out = {
        "degree": D.degree,
        "total": rr.dim,
        "total_formula": total_formula,
        "invariant": formula,
        "invariant_oracle": inv,
        "agree": ok,
    }
    if formula is not None and not inside:
        out["outside_hypothesis"] = True
    return out, EXIT_OK if ok else EXIT_MISMATCH


def _profile_has_hyp(args, prof: RamificationProfile, raw: dict) -> bool:
    if args.hyperelliptic is not None:
        return args.hyperelliptic == "yes"
    if "hyperelliptic" in raw:
        return bool(raw["hyperelliptic"])
    if prof.n == 2:
        # the non-trivial element is the hyperelliptic involution iff the quotient is rational
        return prof.g_Y == 0
    raise UsageError("say whether G contains the hyperelliptic involution (--hyperelliptic yes|no)")


def cmd_faithful(args, cfg: RunConfig):
    model, group, prof, raw = _load_source(args)
    if model is None:
        if args.m is not None:
            return faithful_polydiff(prof, args.m, _profile_has_hyp(args, prof, raw)).to_json(), EXIT_OK
        return divisor_verdict(prof, _profile_spec(args, raw)).to_json(), EXIT_OK
    n = len(group)
    if args.m is not None:
        prof = profile_from_curve(model, group)
        verdict = faithful_polydiff(prof, args.m, has_hyperelliptic_involution(model, group))
        action = action_on_polydiff(model, group, args.m)
    else:
        D = _divisor(model, _read_json(args.divisor))
        prof, spec, cover, bD = concrete_divisor_spec(model, group, D)
        verdict = divisor_verdict(prof, spec)
        action = action_on_rr(cover.model, cover.group, rr_basis(cover.model, bD, cfg))
    matrix = verdict_from_matrices(action, n)
    out = verdict.to_json()
    out["detail"] = {**out["detail"], "matrix_result": matrix, "matrices": _matrices(action)}
    return out, EXIT_OK if agrees(verdict, matrix) else EXIT_MISMATCH


def cmd_basis(args, cfg: RunConfig):
    model, group = parse_curve(_read_json(args.curve))
    basis = basis_polydiff(model, args.m)
    holo = check_holomorphic(model, basis)
    action = action_on_polydiff(model, group, args.m, basis)
    out = {
        "m": args.m,
        "basis": [w.to_json() for w in basis],
        "labels": [w.label() for w in basis],
        "holomorphic": holo,
        "group": [phi.to_json() for phi in group],
        "matrices": _matrices(action),
    }
    return out, EXIT_OK if all(holo) else EXIT_MISMATCH


def cmd_rr(args, cfg: RunConfig):
    model, group = parse_curve(_read_json(args.curve))
    D = _divisor(model, _read_json(args.divisor))
    _, _, cover, bD = concrete_divisor_spec(model, group, D)
    rr = rr_basis(cover.model, bD, cfg)
    ans = rr.ansatz
    basis = []
    for v, u in zip(rr.vectors, rr.basis):
        basis.append({"A": list(v[: ans.da + 1]), "B": list(v[ans.da + 1 :]), "text": repr(u)})
    action = action_on_rr(cover.model, cover.group, rr)
    out = {
        "degree": D.degree,
        "dim": rr.dim,
        "extension": cover.extension,
        "field_q": cover.model.field.q,
        "denominator": list(ans.den.c),
        "basis": basis,
        "group": [phi.to_json() for phi in cover.group],
        "matrices": _matrices(action),
    }
    return out, EXIT_OK


def cmd_goppa(args, cfg: RunConfig):
    model, group = parse_curve(_read_json(args.curve))
    D = _divisor(model, _read_json(args.divisor))
    if args.points == "auto":
        big, bD, pts, d = auto_points(model, D, args.ext, cfg.max_extension)
    else:
        d = args.ext or 1
        if d == 1:
            big, bD = model, D
        else:
            from .curve.places import base_change_divisor

            big, emb = model.base_change(d)
            bD = base_change_divisor(D, model, big, emb)
        ids = _read_json(args.points)
        if not isinstance(ids, list):
            raise UsageError("points file must be a list of place ids")
        pts = [place_from_id(big, pid) for pid in ids]
    if d > 1:
        emb = model.base_change(d)[1]
        bgroup = [embed_automorphism(phi, emb) for phi in group]
    else:
        bgroup = list(group)
    code = goppa_build(big, bD, pts, cfg)
    action = code_action(big, bgroup, code)
    out = {
        "extension": d,
        "code": code.to_json(),
        "designed_distance": code.n - bD.degree,
        "action": action.to_json(),
        "rr_action_faithful": rr_action_faithful(big, bgroup, code),
    }
    if code.field.q ** code.k <= cfg.max_codewords:
        out["min_distance"] = min_distance_bruteforce(code, cfg.max_codewords)
    else:
        out["min_distance"] = None
    if args.alist:
        Path(args.alist).write_text(code.to_alist())
    ok = action.stable and (out["min_distance"] is None or out["min_distance"] >= out["designed_distance"])
    return out, EXIT_OK if ok else EXIT_MISMATCH


def cmd_deform(args, cfg: RunConfig):
    shape = None
    if args.group_shape:
        try:
            shape = json.loads(args.group_shape)
            shape = {"N": int(shape["N"]), "cyclicQuotient": int(shape["cyclicQuotient"])}
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            raise UsageError(f"bad --group-shape: {exc!r}") from None
    reps = []
    if args.curve:
        model, group = parse_curve(_read_json(args.curve))
        prof = profile_from_curve(model, group)
        for m in (1, 2, 3):
            act = action_on_polydiff(model, group, m)
            reps.append(GroupRepresentation(model.field, act.dim, act.matrices, len(group)))
        shape = shape or group_shape(model, group)
    else:
        prof, _ = parse_profile(_read_json(args.profile))
    dd = deformation_dim(prof)
    hyp = check_groups_hypothesis(reps, prof.p, shape)
    out = {"dim": dd["dim"], "crosscheck": dd["crosscheck"], "hypothesis": hyp["hypothesis"]}
    if reps:
        out["samples"] = hyp["samples"]
    return out, EXIT_OK if dd["dim"] == dd["crosscheck"] else EXIT_MISMATCH


def cmd_check(args, cfg: RunConfig):
    model, group = parse_curve(_read_json(args.curve))
    report = run_checks(model, group, cfg, sweep=args.sweep)
    return report, EXIT_OK if report["ok"] else EXIT_MISMATCH


# -- parser --
def build_parser() -> argparse.ArgumentParser:
    # global options are accepted before or after the subcommand
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for randomized sweeps (default EQUICURVE_SEED)")
    common.add_argument("--max-ext", type=int, default=argparse.SUPPRESS, help="largest extension degree tried")
    parser = _Parser(
        prog="equicurve", description="Equivariant Riemann-Roch data for hyperelliptic curves.", parents=[common]
    )
    # no set_defaults here: it would rewrite the shared parent actions, and the
    # subcommand parser would then overwrite options given before the subcommand
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    _add = sub.add_parser

    def add_parser(name, **kw):
        return _add(name, parents=[common], **kw)

    sub.add_parser = add_parser

    def source(p, divisor_help="divisor JSON"):
        g = p.add_mutually_exclusive_group(required=True)
        g.add_argument("--curve")
        g.add_argument("--profile")
        t = p.add_mutually_exclusive_group()
        t.add_argument("--m", type=int)
        t.add_argument("--divisor", help=divisor_help)

    p = sub.add_parser("dims", help="total and invariant dimensions")
    source(p, "concrete divisor JSON (with --curve) or divisor spec JSON (with --profile)")
    p.add_argument("--force", action="store_true", help="evaluate the closed form even below its degree bound")
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("faithful", help="triviality/faithfulness verdict")
    source(p)
    p.add_argument("--hyperelliptic", choices=("yes", "no"), default=None)
    p.set_defaults(func=cmd_faithful)

    p = sub.add_parser("basis", help="basis of holomorphic m-fold differentials")
    p.add_argument("--curve", required=True)
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("rr", help="basis of L(D) and the group action on it")
    p.add_argument("--curve", required=True)
    p.add_argument("--divisor", required=True)
    p.set_defaults(func=cmd_rr)

    p = sub.add_parser("goppa", help="Goppa code C(D, E) and the induced permutation action")
    p.add_argument("--curve", required=True)
    p.add_argument("--divisor", required=True)
    p.add_argument("--points", default="auto", help="'auto' or a JSON list of place ids")
    p.add_argument("--ext", type=int, default=None)
    p.add_argument("--alist", default=None, help="also write the alist-style export here")
    p.set_defaults(func=cmd_goppa)

    p = sub.add_parser("deform", help="equivariant deformation dimension")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--curve")
    g.add_argument("--profile")
    p.add_argument("--group-shape", default=None, help='e.g. \'{"N":1,"cyclicQuotient":2}\'')
    p.set_defaults(func=cmd_deform)

    p = sub.add_parser("check", help="run every cross-validation on a concrete curve")
    p.add_argument("--curve", required=True)
    p.add_argument("--sweep", type=int, default=8, help="number of random invariant divisors")
    p.set_defaults(func=cmd_check)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        for key, value in (("format", "json"), ("seed", None), ("max_ext", 6)):
            if not hasattr(args, key):
                setattr(args, key, value)
        if args.command in ("dims", "faithful") and args.m is None and args.divisor is None and not args.profile:
            parser.error("give --m or --divisor")
        if getattr(args, "m", None) is not None and args.m < 1:
            parser.error("--m must be positive")
        try:
            cfg = RunConfig(max_extension=args.max_ext, output=args.format, seed=args.seed if args.seed is not None else default_seed())
        except ValueError as exc:
            parser.error(str(exc))
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        payload, code = args.func(args, cfg)
    except UsageError as exc:
        print(f"equicurve: {exc}", file=err)
        return EXIT_USAGE
    except EquicurveError as exc:
        print(f"equicurve: {type(exc).__name__}: {exc}", file=err)
        return EXIT_HYPOTHESIS
    emit(payload, cfg.output, out)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
