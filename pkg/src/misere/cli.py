"""Command-line front end.

Every command builds one report dict with the keys ``command``, ``universe``,
``verdict`` and optionally ``witness``, ``bound``, ``trace``, ``assumptions``.
``--json`` prints it as JSON; otherwise it is rendered as text lines.

Exit codes: 0 definite, 2 bounded or inconclusive, 3 budget exceeded,
64 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from collections.abc import Sequence

from .games import (
    NEG_ONE, BudgetExceeded, Game, add, born_by, dicots_born_by, integer, mk_game, node_budget,
    outcome, random_form, times,
)
from .invert import (
    PREDICATES, UhatAssertions, day1_census, is_invertible, is_reduced,
)
from .notation import ParseError, game, parse_universe, to_text
from .order import geq, oracle_geq
from .simplest import simplest_form
from .universes import Kind, is_weak, member
from .verdicts import Status

EXIT_OK, EXIT_BOUNDED, EXIT_BUDGET, EXIT_USAGE = 0, 2, 3, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _t(g: Game | None) -> str | None:
    return None if g is None else to_text(g, short=True)


def _mode(status: Status) -> str:
    return "bounded" if status is Status.BOUNDED else "proven"


# --------------------------------------------------------------------------
# commands; each returns (report, exit code)

def cmd_outcome(args, u):
    g = game(args.expr)
    o = outcome(g)
    verdict = {"left_start": o.left_start.value, "right_start": o.right_start.value,
               "outcome": o.outcome.value}
    return {"verdict": verdict}, EXIT_OK


def _relation(fwd: Status, back: Status) -> str:
    if fwd.holds and back.holds:
        return "≡"
    if fwd.holds:
        return "≥"
    if back.holds:
        return "≤"
    return "incomparable"


def cmd_compare(args, u):
    a, b = game(args.a), game(args.b)
    fwd, back = geq(u, a, b), geq(u, b, a)
    rel = _relation(fwd.status, back.status)
    # a relation is proven when every direction it relies on is decided
    status = Status.TRUE if {fwd.status, back.status} <= {Status.TRUE, Status.FALSE} \
        else Status.BOUNDED
    report = {"verdict": {"relation": rel, "mode": _mode(status),
                          "geq": fwd.status.name, "leq": back.status.name}}
    fails = [v.failure for v in (fwd, back) if v.failure is not None]
    if fails:
        f = fails[0]
        report["witness"] = {"condition": f.condition, "option": _t(f.option),
                             "end": _t(f.witness)}
    if status is Status.BOUNDED:
        report["bound"] = u.end_bound
    return report, EXIT_BOUNDED if status is Status.BOUNDED else EXIT_OK


def cmd_simplify(args, u):
    a = game(args.expr)
    s, trace = simplest_form(u, a, args.assume_bounded)
    report = {"verdict": {"simplest": _t(s), "mode": trace.mode},
              "trace": [{"rule": st.kind, "side": st.side, "before": _t(st.before),
                         "after": _t(st.after), "option": _t(st.option),
                         "target": _t(st.target), "bounded": st.bounded}
                        for st in trace.steps]}
    if trace.bound is not None:
        report["bound"] = trace.bound
    return report, EXIT_BOUNDED if trace.mode == "bounded" else EXIT_OK


def _assertions(args) -> UhatAssertions:
    return UhatAssertions.of([game(x) for x in args.assert_uhat or ()],
                             [game(x) for x in args.assert_absent or ()])


def cmd_invertible(args, u):
    a = game(args.expr)
    uhat = _assertions(args)
    v = is_invertible(u, a, args.assume_bounded)
    label = {Status.TRUE: "invertible", Status.BOUNDED: "invertible (bounded)",
             Status.FALSE: "not invertible"}[v.status]
    report = {"verdict": {"result": label, "mode": _mode(v.status), "simplest": _t(v.simplest),
                          "inverse": _t(v.inverse)},
              "trace": [{"form": _t(g), "left_strong": st.name} for g, st in v.checks]}
    if v.witness is not None:
        report["witness"] = {"subposition": _t(v.witness[0]), "end": _t(v.witness[1])}
    if v.bound is not None:
        report["bound"] = v.bound
    notes = uhat.describe()
    if not a.plain and a not in uhat.present:
        notes["unresolved"] = [_t(a)]
    report["assumptions"] = notes
    return report, EXIT_BOUNDED if v.status is Status.BOUNDED else EXIT_OK


def cmd_predicates(args, u):
    g = game(args.expr)
    return {"verdict": {k: f(g) for k, f in PREDICATES.items()}}, EXIT_OK


def cmd_census(args, u):
    classes = day1_census(u)
    verdict = {"classes": len(classes),
               "representatives": [_t(c.representative) for c in classes],
               "members": [[_t(m) for m in c.members] for c in classes]}
    return {"verdict": verdict}, EXIT_OK


def cmd_probe(args, u):
    uhat = _assertions(args)
    cert = is_weak(u)
    rep = is_reduced(u, uhat)
    weak = {True: "yes", False: "no", None: "unknown"}[cert.weak]
    reduced = {"reduced": "yes", "not_reduced": "no", "inconclusive": "unknown"}[rep.overall]
    report = {"verdict": {"weak": weak, "weak_rule": cert.kind, "reduced": reduced,
                          "reduced_rule": rep.rule,
                          "items": [{"item": i.text, "verdict": i.verdict,
                                     "witness": _t(i.witness), "reason": i.reason}
                                    for i in rep.items]},
              "assumptions": uhat.describe()}
    witness = {}
    if cert.witness is not None:
        witness["weak"] = _t(cert.witness)
    if rep.witness is not None:
        witness["invertible"] = _t(rep.witness)
    if witness:
        report["witness"] = witness
    definite = cert.weak is not None and rep.overall != "inconclusive"
    if not definite:
        report["bound"] = u.end_bound
    return report, EXIT_OK if definite else EXIT_BOUNDED


def _oracle_domain(spec: str, bound: int) -> tuple[list[Game], bool]:
    """Forms to test against, and whether the list is the whole set."""
    if spec.startswith("set:"):
        return [game(x) for x in spec[4:].split(";") if x.strip()], True
    u = parse_universe(spec)
    if u.kind is Kind.DICOT:
        if bound > 3:
            raise UsageError("dicot oracle domains go up to birthday 3")
        return dicots_born_by(bound, max_options=2 if bound == 3 else None), False
    if bound > 2:
        raise UsageError("oracle domains beyond birthday 2 are only listed for D")
    return [g for g in born_by(bound) if member(u, g)], False


def cmd_oracle_compare(args, u):
    domain, whole = _oracle_domain(args.domain, args.bound)
    a, b = game(args.a), game(args.b)
    fwd = oracle_geq(domain, a, b)
    back = oracle_geq(domain, b, a)
    rel = _relation(Status.TRUE if fwd else Status.FALSE, Status.TRUE if back else Status.FALSE)
    report = {"verdict": {"relation": rel, "checked": len(domain),
                          "mode": "exhaustive" if whole else "bounded"}}
    wit = fwd.witness or back.witness
    if wit is not None:
        report["witness"] = {"distinguisher": _t(wit)}
    if not whole:
        report["bound"] = args.bound
    # a refutation is definite; agreement over a finite slice is not
    definite = whole or rel == "incomparable"
    return report, EXIT_OK if definite else EXIT_BOUNDED


def cmd_jtable(args, u):
    end2 = mk_game((), [integer(2)])
    grid = [[outcome(add(times(n, NEG_ONE), times(m, end2))).outcome.value
             for m in range(args.m + 1)] for n in range(args.n + 1)]
    return {"verdict": {"rows": "n copies of ~1", "cols": "m copies of {.|2}",
                        "grid": grid}}, EXIT_OK


def cmd_selfcheck(args, u):
    """Seeded sample: simplest form is idempotent and stays equivalent."""
    rng = random.Random(args.seed)
    bad = []
    dicot = u.kind is Kind.DICOT
    for _ in range(args.count):
        g = random_form(rng, 3, 2, dicot=dicot)
        s, _ = simplest_form(u, g)
        if simplest_form(u, s)[0] is not s or not (geq(u, g, s).holds and geq(u, s, g).holds):
            bad.append(_t(g))
    report = {"verdict": {"sampled": args.count, "failures": len(bad)}}
    if bad:
        report["witness"] = bad[:5]
    return report, EXIT_OK


# --------------------------------------------------------------------------
# text rendering

def render(report: dict) -> str:
    lines = [f"command: {report['command']}"]
    if report.get("universe"):
        lines.append(f"universe: {report['universe']}")
    v = report["verdict"]
    cmd = report["command"].split()[0]
    if cmd == "outcome":
        lines += [f"o^L = {v['left_start']}", f"o^R = {v['right_start']}",
                  f"o = {v['outcome']}"]
    elif cmd in ("compare", "oracle-compare"):
        lines.append(f"{v['relation']} ({v['mode']})")
    elif cmd == "jtable":
        lines.append("n\\m " + " ".join(str(m) for m in range(len(v["grid"][0]))))
        lines += [f"{n:>3} " + " ".join(row) for n, row in enumerate(v["grid"])]
    elif cmd == "probe":
        wk = report.get("witness", {}).get("weak")
        lines.append(f"weak: {v['weak']} ({v['weak_rule']}" + (f" {wk})" if wk else ")"))
        lines.append(f"reduced: {v['reduced']}" + (f" ({v['reduced_rule']})" if v["reduced_rule"] else ""))
        lines += [f"  [{i['verdict']}] {i['item']}" + (f": {i['witness']}" if i["witness"] else "")
                  + (f" ({i['reason']})" if i["reason"] else "") for i in v["items"]]
    elif cmd == "census":
        lines.append(f"{v['classes']} classes")
        lines += [f"  {r}: {', '.join(m)}" for r, m in zip(v["representatives"], v["members"])]
    else:
        lines += [f"{k}: {val}" for k, val in v.items()]
    if "witness" in report and cmd != "probe":
        lines.append(f"witness: {report['witness']}")
    if "bound" in report:
        lines.append(f"bound: {report['bound']}")
    if cmd == "simplify":
        lines += [f"  {s['rule']} ({s['side']}): {s['before']} -> {s['after']}"
                  + (" [bounded]" if s["bounded"] else "") for s in report["trace"]]
    if report.get("assumptions"):
        lines.append(f"assumptions: {report['assumptions']}")
    return "\n".join(lines)


# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--bound", type=int, default=argparse.SUPPRESS,
                        help="birthday bound for Left-end searches (default 3)")
    common.add_argument("--budget", type=int, default=argparse.SUPPRESS,
                        help="node budget (default 1000000)")
    common.add_argument("--assume-bounded", action="store_true", default=argparse.SUPPRESS)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)

    p = _Parser(prog="misere", parents=[common],
                description="Misère games modulo universes.")
    p.set_defaults(bound=3, budget=10**6, assume_bounded=False, json=False, seed=0)
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    def add(name, fn, universe=True, help=None):
        sp = sub.add_parser(name, parents=[common], help=help)
        if universe:
            sp.add_argument("universe", help="D, E, M or cl(expr;...)")
        sp.set_defaults(fn=fn)
        return sp

    add("outcome", cmd_outcome, False, "outcome of a form").add_argument("expr")
    sp = add("compare", cmd_compare, help="compare two forms modulo a universe")
    sp.add_argument("a")
    sp.add_argument("b")
    add("simplify", cmd_simplify, help="simplest form and trace").add_argument("expr")
    sp = add("invertible", cmd_invertible, help="invertibility modulo a universe")
    sp.add_argument("expr")
    add("predicates", cmd_predicates, False, "end predicates").add_argument("expr")
    sp_c = add("census", cmd_census, False, "day-1 augmented census")
    sp_c.add_argument("universe", nargs="?", default="M")
    sp_p = add("probe", cmd_probe, help="weak and reduced report")
    for s in (sp, sp_p):
        s.add_argument("--assert-uhat", nargs="+", metavar="EXPR",
                       help="forms asserted to lie in the hatted universe")
        s.add_argument("--assert-absent", nargs="+", metavar="EXPR",
                       help="forms asserted not to lie in the hatted universe")
    sp = add("oracle-compare", cmd_oracle_compare, False,
             "definitional comparison over a finite domain")
    sp.add_argument("domain", help="a universe, or set:expr;expr;...")
    sp.add_argument("a")
    sp.add_argument("b")
    sp = add("jtable", cmd_jtable, False, "outcomes of n*~1 + m*{.|2}")
    sp.add_argument("--n", type=int, default=4)
    sp.add_argument("--m", type=int, default=4)
    sp = add("selfcheck", cmd_selfcheck, help="seeded simplest-form property sample")
    sp.add_argument("--count", type=int, default=50)
    return p


def run(argv: Sequence[str] | None = None) -> tuple[dict | None, int]:
    p = build_parser()
    args = p.parse_args(argv)
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        u = None
        if getattr(args, "universe", None) is not None:
            u = parse_universe(args.universe, end_bound=args.bound, node_budget=args.budget)
        with node_budget(args.budget):
            report, code = args.fn(args, u)
    except (ParseError, UsageError, ValueError) as err:
        return {"command": " ".join(argv), "error": str(err)}, EXIT_USAGE
    except BudgetExceeded as err:
        return {"command": " ".join(argv), "error": str(err)}, EXIT_BUDGET
    out = {"command": " ".join(argv), "universe": None if u is None else str(u)}
    out.update(report)
    return out, code


def main(argv: Sequence[str] | None = None) -> int:
    report, code = run(argv)
    args_json = "--json" in (sys.argv[1:] if argv is None else argv)
    if "error" in report:
        if args_json:
            print(json.dumps(report, ensure_ascii=False))
        else:
            print(f"error: {report['error']}", file=sys.stderr)
        return code
    print(json.dumps(report, ensure_ascii=False, sort_keys=True) if args_json else render(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
