"""Command-line front end: ``planarflow solve|dualize|gen|bench``.

Exit codes: 0 optimal (or success), 1 usage or input error, 2 infeasible,
3 unbounded.
"""
from __future__ import annotations

import argparse
import random
import statistics
import sys
import time

from .duality import build_lp_dual
from .errors import NonZeroBalances, PlanarFlowError
from .generator import OUTER_DART, random_outerplanar
from .instance_io import Instance, format_solution, read_instance, serialize_instance
from .network import INFEASIBLE, OPTIMAL, UNBOUNDED, certify_optimal
from .oracle import solve_reference

EXIT = {OPTIMAL: 0, INFEASIBLE: 2, UNBOUNDED: 3}


def _solver(reference: bool):
    if reference:
        from .solver import decompose_and_solve_outerplanar
        return decompose_and_solve_outerplanar
    from .fast import solve_outerplanar_fast
    return solve_outerplanar_fast


def cmd_solve(args) -> int:
    inst = read_instance(args.path)
    net = inst.network
    if net.embedding is None:
        raise PlanarFlowError("the instance has no embedding ('e' lines)")
    out = _solver(args.reference)(net, inst.outer_dart)
    text = format_solution(out.status, out.cost, out.flow if out.optimal else None)
    sys.stdout.write(text)
    code = EXIT[out.status]
    if args.certify and out.optimal:
        cert = certify_optimal(net, out.flow)
        print("c certificate: ok" if cert else "c certificate: failed")
        if not cert:
            code = 1
    if args.oracle:
        ref = solve_reference(net)
        if ref.status == out.status and ref.cost == out.cost:
            print("c oracle: match")
        else:
            print(f"c oracle: mismatch ({ref.status}, cost {ref.cost})")
            code = 1
    return code


def cmd_dualize(args) -> int:
    inst = read_instance(args.path)
    net = inst.network
    if not net.is_circulation():
        raise NonZeroBalances("dualize needs a circulation (all balances zero)")
    if net.embedding is None:
        raise PlanarFlowError("the instance has no embedding ('e' lines)")
    dual = build_lp_dual(net)
    comments = [f"transshipment on the {dual.network.n} faces of the input"]
    comments += [f"map {i + 1} {a + 1} {'forward' if fwd else 'backward'}"
                 for i, (a, fwd) in enumerate(dual.origin)]
    sys.stdout.write(serialize_instance(Instance(dual.network, None, comments)))
    return 0


def cmd_gen(args) -> int:
    if args.n < 3:
        raise PlanarFlowError("--n must be at least 3")
    if args.chords is not None and not 0 <= args.chords <= args.n - 3:
        raise PlanarFlowError(f"--chords must lie in [0, {args.n - 3}]")
    mode = "feasible" if args.feasible else "random" if args.balanced else "zero"
    net = random_outerplanar(
        args.n, args.chords, max_cost=args.max_cost, max_cap=args.max_cap,
        lower_bounds=args.lower_bounds, balance=mode, inf_prob=args.inf_prob,
        seed=args.seed)
    comment = f"outerplanar n={args.n} seed={args.seed}"
    sys.stdout.write(serialize_instance(Instance(net, OUTER_DART, [comment])))
    return 0


def cmd_bench(args) -> int:
    from .fast import certify_fast, solve_outerplanar_fast, warm_up
    if list(args.sizes) != sorted(args.sizes):
        raise PlanarFlowError("--sizes must be ascending")
    warm_up()
    rng = random.Random(args.seed)
    print("n,m,median_solve_ns,oracle_ns,certificate_ok")
    for n in args.sizes:
        times, ok = [], True
        oracle_ns = ""
        for _ in range(args.repeats):
            net = random_outerplanar(n, n // 2, max_cost=args.max_cost, max_cap=args.max_cap,
                                     lower_bounds=True, balance="feasible",
                                     seed=rng.getrandbits(64))
            start = time.perf_counter_ns()
            out = solve_outerplanar_fast(net, OUTER_DART)
            times.append(time.perf_counter_ns() - start)
            ok = ok and out.optimal and certify_fast(net, out.flow)
        if n <= args.oracle_max:
            start = time.perf_counter_ns()
            ref = solve_reference(net)
            oracle_ns = time.perf_counter_ns() - start
            ok = ok and ref.cost == out.cost
        print(f"{n},{net.m},{int(statistics.median(times))},{oracle_ns},{str(ok).lower()}",
              flush=True)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="planarflow", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve an embedded outerplanar instance")
    p.add_argument("path")
    p.add_argument("--certify", action="store_true", help="check the optimality certificate")
    p.add_argument("--oracle", action="store_true", help="compare with the reference solver")
    p.add_argument("--reference", action="store_true",
                   help="run the pure-Python pipeline instead of the compiled one")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("dualize", help="emit the transshipment dual of a circulation")
    p.add_argument("path")
    p.set_defaults(func=cmd_dualize)

    p = sub.add_parser("gen", help="generate a biconnected outerplanar instance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--chords", type=int, default=None)
    p.add_argument("--max-cost", type=int, default=10)
    p.add_argument("--max-cap", type=int, default=20)
    p.add_argument("--lower-bounds", action="store_true")
    p.add_argument("--balanced", action="store_true",
                   help="random supplies matched by demands (default: circulation)")
    p.add_argument("--feasible", action="store_true",
                   help="balances taken from a random flow within bounds")
    p.add_argument("--inf-prob", type=float, default=0.0)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="time the solver on generated instances (CSV)")
    p.add_argument("--sizes", type=int, nargs="+", default=[2 ** k for k in range(13, 19)])
    p.add_argument("--repeats", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-cost", type=int, default=10)
    p.add_argument("--max-cap", type=int, default=20)
    p.add_argument("--oracle-max", type=int, default=4096,
                   help="run the reference solver only up to this size")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code else 0
    try:
        return args.func(args)
    except (PlanarFlowError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
