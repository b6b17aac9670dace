"""Command line front end: exact values in canonical JSON or readable text."""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import goldens
from . import jack as jackmod
from . import rect as rectmod
from . import theta as thetamod
from . import verify as verifymod
from .config import Config
from .exactalg import MPoly, RatFunc
from .partitions import (alpha_content_sum, box_moves, conjugate,
                         enumerate_partitions, hook_products, parse_partition,
                         render_partition, z_factor)


def _emit(cfg: Config, obj, text: str) -> None:
    if cfg.output == "json":
        print(json.dumps(obj, separators=(",", ":"), sort_keys=False))
    else:
        print(text)


def _poly_out(cfg: Config, poly) -> None:
    _emit(cfg, poly.to_obj(), poly.render())


# -- subcommand handlers --------------------------------------------------------


def _cmd_partitions(cfg: Config, args) -> int:
    if args.action == "conjugate":
        lam = parse_partition(args.lam)
        out = conjugate(lam)
        _emit(cfg, list(out), render_partition(out))
    elif args.action == "z":
        lam = parse_partition(args.lam)
        _emit(cfg, z_factor(lam), str(z_factor(lam)))
    elif args.action == "hooks":
        lam = parse_partition(args.lam)
        h, hp, j = hook_products(lam)
        _emit(cfg, {"h": h.to_obj(), "h_prime": hp.to_obj(), "j": j.to_obj()},
              f"h = {h.render()}\nh' = {hp.render()}\nj = {j.render()}")
    elif args.action == "d1":
        lam = parse_partition(args.lam)
        _poly_out(cfg, alpha_content_sum(lam))
    elif args.action == "moves":
        lam = parse_partition(args.lam)
        moves = box_moves(lam)
        obj = {
            "add": [[i, list(nu)] for i, nu in moves["add"]],
            "remove": [[i, list(nu)] for i, nu in moves["remove"]],
        }
        text = ("add: " + ", ".join(f"{i}:{render_partition(nu)}" for i, nu in moves["add"])
                + "\nremove: " + ", ".join(f"{i}:{render_partition(nu)}" for i, nu in moves["remove"]))
        _emit(cfg, obj, text)
    else:  # list
        inside = parse_partition(args.inside) if args.inside else None
        parts = enumerate_partitions(args.n, inside=inside)
        _emit(cfg, [list(p) for p in parts],
              "\n".join(render_partition(p) for p in parts))
    return 0


def _cmd_jack(cfg: Config, args) -> int:
    jackmod.DEFAULT_MAX_WEIGHT = cfg.max_weight
    if args.action == "expand":
        lam = parse_partition(args.lam)
        exp = jackmod.jack(lam)
        which = {"p": ("in_p",), "m": ("in_m",), "both": ("in_p", "in_m")}[args.basis]
        obj = {name[3:]: getattr(exp, name).to_obj() for name in which}
        text = "\n".join(f"{name[3:]}: {getattr(exp, name)!r}" for name in which)
        _emit(cfg, obj, text)
    elif args.action == "theta":
        lam = parse_partition(args.lam)
        rho = parse_partition(args.rho)
        _poly_out(cfg, jackmod.theta(lam, rho))
    elif args.action == "binom":
        lam = parse_partition(args.lam)
        mu = parse_partition(args.mu)
        _poly_out(cfg, jackmod.binom(lam, mu))
    else:  # pieri
        lam = parse_partition(args.lam)
        if args.i is not None:
            _poly_out(cfg, jackmod.pieri_c(lam, args.i))
        else:
            moves = box_moves(lam)["add"]
            obj = {str(i): jackmod.pieri_c(lam, i).to_obj() for i, _ in moves}
            text = "\n".join(f"c_{i} = {jackmod.pieri_c(lam, i).render()}" for i, _ in moves)
            _emit(cfg, obj, text)
    return 0


def _cmd_theta(cfg: Config, args) -> int:
    jackmod.DEFAULT_MAX_WEIGHT = cfg.max_weight
    if args.action == "hat":
        lam = parse_partition(args.lam)
        mu = parse_partition(args.mu)
        _poly_out(cfg, thetamod.theta_hat(lam, mu, route=args.route))
    elif args.action == "rect":
        mu = parse_partition(args.mu)
        mode = "closed_form_m1" if args.mode == "closed" else "interpolate"
        rp = thetamod.rect_theta_symbolic(args.m, mu, mode=mode)
        audit = rp.conjecture_audit()
        obj = {"poly": rp.poly.to_obj(),
               "normal_form": rp.signed_flipped().to_obj(),
               "audit": audit.to_obj()}
        text = (f"poly = {rp.poly.render()}\n"
                f"normal form = {rp.signed_flipped().render()}\n"
                f"audit: {audit!r}")
        _emit(cfg, obj, text)
    else:  # thm2
        mu = parse_partition(args.mu)
        _poly_out(cfg, thetamod.theorem2_sum(mu))
    return 0


def _cmd_rect(cfg: Config, args) -> int:
    if args.action == "theta":
        mu = parse_partition(args.mu)
        rt = rectmod.rect_recurrence(mu, beta_linked=not args.independent_beta)
        _poly_out(cfg, rt.value)
    elif args.action == "boundary":
        mu = parse_partition(args.mu)
        _poly_out(cfg, rectmod.rect_boundary(mu, args.which))
    else:  # divisibility
        mu = parse_partition(args.mu)
        rep = rectmod.extension_divisibility(mu, args.p, args.q)
        text = (f"value = {rep.value.render()}\ndivisible: {rep.divisible}"
                + (f"\nquotient = {rep.quotient.render()}" if rep.quotient else ""))
        _emit(cfg, rep.to_obj(), text)
    return 0


def _run_job(job):
    check_id, params = job
    return verifymod.CHECK_FUNCS[check_id](*params)


def _run_reports(cfg: Config, jobs):
    if cfg.parallelism > 1:
        with ProcessPoolExecutor(max_workers=cfg.parallelism) as pool:
            return list(pool.map(_run_job, jobs, chunksize=16))
    return [_run_job(j) for j in jobs]


def _cmd_verify(cfg: Config, args) -> int:
    jackmod.DEFAULT_MAX_WEIGHT = max(cfg.max_weight, getattr(args, "max_n", 0) + 1)
    if args.action == "identities":
        check_ids = args.checks.split(",") if args.checks else list(verifymod.IDENTITY_CHECKS)
        jobs = []
        for cid in check_ids:
            for n in range(0, args.max_n + 1):
                for lam in enumerate_partitions(n):
                    for params in verifymod.check_params(cid, lam):
                        jobs.append((cid, params))
        if args.sample is not None and args.sample < len(jobs):
            import random

            rng = random.Random(cfg.seed)
            jobs = sorted(rng.sample(jobs, args.sample), key=lambda j: (j[0], str(j[1])))
        reports = _run_reports(cfg, jobs)
    elif args.action == "conjecture1":
        reports = verifymod.conjecture1_sweep(args.m, args.mu_max)
    elif args.action == "table6":
        reports = verifymod.table6_check()
    elif args.action == "theorem1":
        reports = verifymod.theorem1_suite(args.mu_max)
    else:  # thm2
        mu = parse_partition(args.mu)
        reports = verifymod.thm2_check(mu)
    summary = verifymod.summarize(reports)
    report_objs = [r.to_obj() for r in reports]
    if not args.timings:
        # timings are not part of the deterministic contract
        for o in report_objs:
            o["runtime_ms"] = 0
        summary = dict(summary, runtime_ms=0)
        for f in summary["first_failures"]:
            f["runtime_ms"] = 0
    obj = {"reports": report_objs, "summary": summary}
    text = "\n".join(f"{r.check_id} {r.params}: {r.verdict}" for r in reports)
    text += (f"\ntotal={summary['total']} pass={summary['pass']} "
             f"fail={summary['fail']} finding={summary['finding']}")
    _emit(cfg, obj, text)
    return 1 if summary["fail"] else 0


def _cmd_golden(cfg: Config, args) -> int:
    results = goldens.check_goldens(args.dir or goldens.default_dir(), bless=args.bless)
    obj = {name: status for name, status in results}
    text = "\n".join(f"{name}: {status}" for name, status in results)
    _emit(cfg, obj, text)
    return 0 if all(s in ("ok", "blessed") for _, s in results) else 1


# -- argument parsing ------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jacktheta",
        description="Exact Jack-polynomial power-sum coefficients and positivity audits.",
    )
    parser.add_argument("--output", choices=("json", "text"), default="json")
    parser.add_argument("--max-weight", type=int, default=None,
                        help="Jack expansion weight limit (env JACK_MAX_WEIGHT)")
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument("--parallelism", type=int, default=1)
    parser.add_argument("--timings", action="store_true",
                        help="include real runtimes in reports (non-deterministic)")
    sub = parser.add_subparsers(dest="command", required=True)

    p_part = sub.add_parser("partitions", help="partition utilities")
    part_sub = p_part.add_subparsers(dest="action", required=True)
    for name in ("conjugate", "z", "hooks", "d1", "moves"):
        sp = part_sub.add_parser(name)
        sp.add_argument("--lambda", dest="lam", required=True)
    sp = part_sub.add_parser("list")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--inside", default=None)

    p_jack = sub.add_parser("jack", help="Jack expansions and coefficients")
    jack_sub = p_jack.add_subparsers(dest="action", required=True)
    sp = jack_sub.add_parser("expand")
    sp.add_argument("--lambda", dest="lam", required=True)
    sp.add_argument("--basis", choices=("p", "m", "both"), default="p")
    sp = jack_sub.add_parser("theta")
    sp.add_argument("--lambda", dest="lam", required=True)
    sp.add_argument("--rho", required=True)
    sp = jack_sub.add_parser("binom")
    sp.add_argument("--lambda", dest="lam", required=True)
    sp.add_argument("--mu", required=True)
    sp = jack_sub.add_parser("pieri")
    sp.add_argument("--lambda", dest="lam", required=True)
    sp.add_argument("--i", type=int, default=None)

    p_theta = sub.add_parser("theta", help="normalized coefficients")
    theta_sub = p_theta.add_subparsers(dest="action", required=True)
    sp = theta_sub.add_parser("hat")
    sp.add_argument("--lambda", dest="lam", required=True)
    sp.add_argument("--mu", required=True)
    sp.add_argument("--route", choices=("binom", "direct"), default="binom")
    sp = theta_sub.add_parser("rect")
    sp.add_argument("--m", type=int, default=1)
    sp.add_argument("--mu", required=True)
    sp.add_argument("--mode", choices=("interpolate", "closed"), default="interpolate")
    sp = theta_sub.add_parser("thm2")
    sp.add_argument("--mu", required=True)

    p_rect = sub.add_parser("rect", help="rectangular recurrence engine")
    rect_sub = p_rect.add_subparsers(dest="action", required=True)
    sp = rect_sub.add_parser("theta")
    sp.add_argument("--mu", required=True)
    sp.add_argument("--independent-beta", action="store_true")
    sp = rect_sub.add_parser("boundary")
    sp.add_argument("--mu", required=True)
    sp.add_argument("--which", choices=rectmod.BOUNDARY_KINDS, required=True)
    sp = rect_sub.add_parser("divisibility")
    sp.add_argument("--mu", required=True)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)

    p_verify = sub.add_parser("verify", help="identity and conjecture suites")
    verify_sub = p_verify.add_subparsers(dest="action", required=True)
    sp = verify_sub.add_parser("identities")
    sp.add_argument("--max-n", type=int, default=7)
    sp.add_argument("--checks", default=None, help="comma separated subset of I1..I7,P1")
    sp.add_argument("--sample", type=int, default=None)
    sp = verify_sub.add_parser("conjecture1")
    sp.add_argument("--m", type=int, default=1)
    sp.add_argument("--mu-max", type=int, default=5)
    sp = verify_sub.add_parser("table6")
    sp = verify_sub.add_parser("theorem1")
    sp.add_argument("--mu-max", type=int, default=6)
    sp = verify_sub.add_parser("thm2")
    sp.add_argument("--mu", required=True)

    p_gold = sub.add_parser("golden", help="check or regenerate golden files")
    p_gold.add_argument("--bless", action="store_true")
    p_gold.add_argument("--dir", default=None)

    return parser


COMMANDS = {
    "partitions": _cmd_partitions,
    "jack": _cmd_jack,
    "theta": _cmd_theta,
    "rect": _cmd_rect,
    "verify": _cmd_verify,
    "golden": _cmd_golden,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    overrides = {"output": args.output, "seed": args.seed, "parallelism": args.parallelism}
    if args.max_weight is not None:
        overrides["max_weight"] = args.max_weight
    cfg = Config.from_env(**overrides)
    try:
        return COMMANDS[args.command](cfg, args)
    except (ValueError, KeyError,
            jackmod.WeightLimitExceeded, jackmod.InvalidMove, jackmod.NotContained,
            thetamod.MuHasOnes, thetamod.MuTooHeavy, thetamod.RhoTooHeavy,
            thetamod.DegreeBoundViolated) as exc:
        print(json.dumps({"error": {"type": type(exc).__name__, "message": str(exc)}}),
              file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
