"""Command-line front door.

Exit codes: 0 = YES/success, 1 = NO/violations found, 2 = usage error,
3 = resource budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import afio, classic, qbf, testkit, weak
from .core import ArgSet
from .games import (DEFAULT_STATE_BUDGET, DisputeKind, DisputeState, OPP, PRO,
                    ResourceBudgetError, SEMANTICS_TAGS, STRONG_TENABILITY,
                    TENABILITY, best_move, credulous, diagnose_move,
                    is_statically_tenable, legal_opp_moves, legal_pro_moves,
                    solve_dispute)

EXIT_YES = 0
EXIT_NO = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class UsageError(Exception):
    pass


def _load_framework(args):
    sources = [s for s in (getattr(args, "fixture", None), getattr(args, "path", None)) if s]
    if len(sources) != 1:
        raise UsageError("provide exactly one input: a file path, '-' for stdin, or --fixture NAME")
    if getattr(args, "fixture", None):
        try:
            return afio.get_fixture(args.fixture).framework, args.fixture
        except KeyError as e:
            raise UsageError(str(e))
    path = args.path
    text = sys.stdin.read() if path == "-" else open(path).read()
    return afio.parse_framework(text, getattr(args, "format", "auto")), path


def _parse_set(fw, spec_text):
    labels = [s.strip() for s in spec_text.split(",") if s.strip()] if spec_text else []
    try:
        return fw.set_of(*labels)
    except KeyError as e:
        raise UsageError(e.args[0])


def _emit(args, answer, semantics, source, stats=None, text=None):
    if getattr(args, "json", False):
        print(json.dumps({"semantics": semantics, "input": source,
                          "answer": answer, "stats": stats or {}}))
    else:
        print(text if text is not None else ("YES" if answer else "NO"))


def cmd_solve(args):
    fw, source = _load_framework(args)
    sem = args.semantics
    budget = args.budget
    if sem == "grounded":
        g = classic.grounded(fw)
        ext = g.fixpoint.labels()
        _emit(args, ext, sem, source, text="{" + ", ".join(ext) + "}")
        return EXIT_YES
    A = _parse_set(fw, args.set)
    t0 = time.monotonic()
    stats = {}
    if sem == "admissible":
        ans = classic.is_admissible(fw, A)
    elif sem == "cogent":
        ans = weak.is_cogent(fw, A)
    elif sem == "cycog":
        ans = weak.is_cyclically_cogent(fw, A)
    elif sem == "wadm":
        ans = weak.is_weakly_admissible(fw, A)
    elif sem == "wcomp":
        ans = weak.is_weakly_complete_extension(fw, A)
    elif sem == "stat-ten":
        ans = is_statically_tenable(fw, A)
    elif sem in ("ten", "strong-ten"):
        kind = DisputeKind(TENABILITY if sem == "ten" else STRONG_TENABILITY)
        res = solve_dispute(fw, A, kind, budget=budget)
        ans = res.winner == PRO
        stats = {"states_visited": res.states_visited, "memo_hits": res.memo_hits}
    else:
        raise UsageError(f"semantics {sem!r} does not support solve")
    stats["seconds"] = round(time.monotonic() - t0, 6)
    _emit(args, ans, sem, source, stats)
    return EXIT_YES if ans else EXIT_NO


def cmd_credulous(args):
    fw, source = _load_framework(args)
    try:
        idx = fw.resolve(args.arg)
    except KeyError as e:
        raise UsageError(str(e.args[0]))
    ans = credulous(fw, idx, args.semantics, budget=args.budget)
    _emit(args, ans, args.semantics, source)
    return EXIT_YES if ans else EXIT_NO


def cmd_enumerate(args):
    fw, source = _load_framework(args)
    if args.semantics != "wcomp":
        raise UsageError("enumerate supports --semantics wcomp only")
    exts = weak.weakly_complete_extensions(fw)
    if args.json:
        print(json.dumps({"semantics": "wcomp", "input": source,
                          "answer": [e.labels() for e in exts], "stats": {"count": len(exts)}}))
    else:
        for e in exts:
            print("{" + ", ".join(e.labels()) + "}")
    return EXIT_YES


def _describe_violation(condition, reason):
    return f"illegal move, condition ({condition}): {reason}"


def cmd_dispute(args):
    fw, _ = _load_framework(args)
    kind = DisputeKind(TENABILITY if args.kind == "ten" else STRONG_TENABILITY,
                       args.bound)
    human = PRO if args.as_side == "pro" else OPP
    initial = _parse_set(fw, args.initial)
    if not fw.cf_mask(initial.mask):
        print("initial position is not conflict-free (condition (1))")
        return EXIT_USAGE
    state = DisputeState(pro_commit=initial, opp_commit=fw.empty_set(), turn=OPP,
                         move_index=1)
    print(f"dispute on {fw.n} arguments; Pro opens with {initial!r}")

    def show():
        print(f"  Pro: {state.pro_commit!r}   Opp: {state.opp_commit!r}   to move: {state.turn}")

    while True:
        mover_gen = legal_pro_moves if state.turn == PRO else legal_opp_moves
        has_move = next(iter(mover_gen(fw, state, kind)), None) is not None
        if not has_move:
            winner = PRO if state.turn == OPP else OPP
            print(f"{state.turn} has no legal move; {winner} wins")
            return EXIT_YES if winner == PRO else EXIT_NO
        show()
        if state.turn == human:
            line = input(f"your move as {human} (labels to add, comma-separated): ").strip()
            if line in ("quit", "exit"):
                return EXIT_USAGE
            try:
                add = _parse_set(fw, line)
            except UsageError as e:
                print(e)
                continue
            ok, cond, reason = diagnose_move(fw, state, kind, add.mask)
            if not ok:
                print(_describe_violation(cond, reason))
                continue
            new = (state.pro_commit | add) if human == PRO else (state.opp_commit | add)
        else:
            new = best_move(fw, state, kind, budget=args.budget)
            print(f"engine ({state.turn}) plays {new!r}")
        if state.turn == PRO:
            state = DisputeState(new, state.opp_commit, OPP, state.move_index + 1)
        else:
            state = DisputeState(state.pro_commit, new, PRO, state.move_index + 1)


def cmd_lattice_check(args):
    violations = 0
    frameworks = [fx.framework for fx in afio.fixtures()
                  if fx.framework.n <= testkit.ZOO_SIZE_CAP]
    rng_seeds = range(args.seed, args.seed + args.count)
    for k, seed in enumerate(rng_seeds):
        cfg = testkit.GenConfig(n=seed % (args.max_n + 1),
                                p_attack=(0.15, 0.3)[k % 2], seed=seed)
        frameworks.append(testkit.random_framework(cfg))
    for fw in frameworks:
        rep = testkit.zoo_check(fw)
        violations += len(rep.violations)
        for v in rep.violations:
            print("violation:", v)
    print(f"checked {len(frameworks)} frameworks, {violations} violations")
    return EXIT_YES if violations == 0 else EXIT_NO


def cmd_qbf2af(args):
    text = sys.stdin.read() if args.path == "-" else open(args.path).read()
    formula = qbf.parse_qdimacs(text)
    red = qbf.qbf_to_af(formula)
    sys.stdout.write(afio.write_iccma(red.framework))
    label = red.framework.names[red.designated]
    ext_id = red.designated + 1
    print(f"# designated argument: {label} (id {ext_id})")
    return EXIT_YES


def cmd_fixtures(args):
    total = 0
    matched = 0
    for name in afio.TABLE_FIXTURE_NAMES:
        fx = afio.get_fixture(name)
        for tag in afio.TABLE_SEMANTICS:
            want = fx.expected[tag]
            got = credulous(fx.framework, fx.designated, tag, budget=args.budget)
            total += 1
            if got == want:
                matched += 1
            else:
                print(f"cell mismatch: {name} {tag}: expected {want}, computed {got}")
    print(f"{matched}/{total} cells match")
    return EXIT_YES if matched == total else EXIT_NO


def cmd_bench(args):
    names = args.names or list(afio.TABLE_FIXTURE_NAMES)
    rows = []

    def run(name):
        fx = afio.get_fixture(name)
        kind = DisputeKind(TENABILITY)
        t0 = time.monotonic()
        res = solve_dispute(fx.framework, fx.designated_set(), kind, budget=args.budget)
        return (name, res.winner, res.states_visited, time.monotonic() - t0)

    if args.jobs > 1:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(run, names))
    else:
        rows = [run(n) for n in names]
    for name, winner, states, secs in rows:
        print(f"{name:12s} winner={winner:4s} states={states:8d} time={secs * 1000:.1f}ms")
    return EXIT_YES


def cmd_serve(args):
    import uvicorn

    from .service import create_app
    uvicorn.run(create_app(budget=args.budget), host=args.host, port=args.port)
    return EXIT_YES


def build_parser():
    p = argparse.ArgumentParser(prog="tenab",
                                description="tenability semantics toolbox for argumentation frameworks")
    sub = p.add_subparsers(dest="command", required=True)

    def add_input(sp):
        sp.add_argument("path", nargs="?", help="framework file, or - for stdin")
        sp.add_argument("--fixture", help="built-in fixture name")
        sp.add_argument("--format", default="auto", choices=["auto", "iccma", "apx"])

    def add_budget(sp):
        sp.add_argument("--budget", type=int, default=DEFAULT_STATE_BUDGET)

    sp = sub.add_parser("solve", help="decide a semantics for a set")
    add_input(sp)
    sp.add_argument("--semantics", required=True, choices=SEMANTICS_TAGS)
    sp.add_argument("--set", default="", help="comma-separated labels")
    sp.add_argument("--json", action="store_true")
    add_budget(sp)
    sp.set_defaults(fn=cmd_solve)

    sp = sub.add_parser("credulous", help="credulous acceptance of one argument")
    add_input(sp)
    sp.add_argument("--semantics", required=True, choices=SEMANTICS_TAGS)
    sp.add_argument("--arg", required=True)
    sp.add_argument("--json", action="store_true")
    add_budget(sp)
    sp.set_defaults(fn=cmd_credulous)

    sp = sub.add_parser("enumerate", help="enumerate extensions")
    add_input(sp)
    sp.add_argument("--semantics", required=True, choices=["wcomp"])
    sp.add_argument("--all", action="store_true")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(fn=cmd_enumerate)

    sp = sub.add_parser("dispute", help="play a dispute in the terminal")
    add_input(sp)
    sp.add_argument("--kind", required=True, choices=["ten", "strong"])
    sp.add_argument("--as", dest="as_side", required=True, choices=["pro", "opp"])
    sp.add_argument("--initial", required=True)
    sp.add_argument("--bound", type=int, default=None)
    add_budget(sp)
    sp.set_defaults(fn=cmd_dispute)

    sp = sub.add_parser("lattice-check", help="check the implication lattice")
    sp.add_argument("--count", type=int, default=100)
    sp.add_argument("--max-n", type=int, default=6)
    sp.add_argument("--seed", type=int, default=1)
    sp.set_defaults(fn=cmd_lattice_check)

    sp = sub.add_parser("qbf2af", help="reduce a QDIMACS formula to a framework")
    sp.add_argument("path", help="QDIMACS file, or - for stdin")
    sp.set_defaults(fn=cmd_qbf2af)

    sp = sub.add_parser("fixtures", help="verify the fixture acceptance table")
    add_budget(sp)
    sp.set_defaults(fn=cmd_fixtures)

    sp = sub.add_parser("bench", help="time the dispute solver")
    sp.add_argument("names", nargs="*", help="fixture names")
    sp.add_argument("--jobs", type=int, default=1)
    add_budget(sp)
    sp.set_defaults(fn=cmd_bench)

    sp = sub.add_parser("serve", help="run the dispute HTTP service")
    sp.add_argument("--host", default="127.0.0.1")
    sp.add_argument("--port", type=int, default=8000)
    add_budget(sp)
    sp.set_defaults(fn=cmd_serve)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else 0
    try:
        return args.fn(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (afio.ParseError, qbf.QbfParseError, weak.SizeLimitError, FileNotFoundError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceBudgetError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
