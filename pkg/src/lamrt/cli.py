"""Command-line driver.

Input closures come from the positional argument, --file, or stdin. Output
is line oriented (verdict:, term:, env:, bound:, steps:, arity:) so scripts
can grep a single line. Exit codes: 0 valid/true/success, 1 invalid/false,
2 parse error, 3 fuel exhausted, 4 precondition failure (conversion operand
without arity, type query on an invalid term, weak head failure).
"""

from __future__ import annotations

import argparse
import sys

from .arity import format_arity, infer_arity
from .checker import check_valid, rt_convertible
from .domains import OMEGA, parse_domain
from .errors import (
    FuelExhausted,
    Invalid,
    NoArity,
    NoTypeStep,
    OpenHead,
    StuckApplication,
)
from .eta import eta_expand_closure
from .normalize import rt_normal_form, whnf_rt
from .steps import canonical_type, step_rt
from .surface import (
    ParseError,
    parse_closure_with_names,
    parse_term_in_scope,
    print_closure,
    print_env,
    print_term,
)
from .terms import Cast, SUCCESSOR
from . import report as report_module


def _load_config(path: str) -> dict:
    values = {}
    with open(path) as handle:
        for raw in handle:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ValueError(f"bad config line: {raw.rstrip()}")
            key, _, value = line.partition("=")
            values[key.strip()] = value.strip()
    return values


def _sort_policy(spec: str):
    from .terms import table_policy

    if spec == "succ":
        return SUCCESSOR
    if spec.startswith("table:"):
        table = {}
        with open(spec[len("table:"):]) as handle:
            for raw in handle:
                line = raw.strip()
                if not line or line.startswith("#"):
                    continue
                key, _, value = line.partition("=")
                table[int(key)] = int(value)
        return table_policy(table)
    raise ValueError(f"bad sort policy spec: {spec!r}")


class _Settings:
    def __init__(self, args):
        config = _load_config(args.config) if args.config else {}
        self.fuel = args.fuel
        if self.fuel is None and "fuel" in config:
            self.fuel = int(config["fuel"])
        sorts = args.sorts or config.get("sorts", "succ")
        self.policy = _sort_policy(sorts)
        domain_spec = getattr(args, "domain", None) or config.get(
            "domain", "omega"
        )
        self.domain = parse_domain(domain_spec)


def _read_text(args) -> str:
    if args.closure is not None:
        return args.closure
    if args.file:
        with open(args.file) as handle:
            return handle.read()
    return sys.stdin.read()


def _read_closure(args):
    return parse_closure_with_names(_read_text(args))


def _emit_env(env):
    if env:
        print(f"env: {print_env(env)}")


def _names_for(env):
    return tuple(f"x{k}" for k in range(len(env)))


def cmd_parse(args, settings) -> int:
    closure, _ = _read_closure(args)
    _emit_env(closure.env)
    print(f"term: {print_term(closure.subject, _names_for(closure.env))}")
    return 0


def cmd_reduce(args, settings) -> int:
    closure, _ = _read_closure(args)
    t = closure.subject
    taken = 0
    for _ in range(args.steps):
        candidates = [
            st
            for st in step_rt(closure.env, t, settings.policy)
            if st.bound == 0
        ]
        if not candidates:
            break
        t = candidates[0].term
        taken += 1
    print(f"term: {print_term(t, _names_for(closure.env))}")
    print(f"steps: {taken}")
    return 0


def cmd_whnf(args, settings) -> int:
    closure, _ = _read_closure(args)
    result = whnf_rt(closure.env, closure.subject, settings.policy, settings.fuel)
    print(f"bound: {result.bound}")
    print(f"term: {print_term(result.term, _names_for(closure.env))}")
    return 0


def cmd_nf(args, settings) -> int:
    closure, _ = _read_closure(args)
    form = rt_normal_form(
        closure.env, closure.subject, args.rt_bound, settings.policy, settings.fuel
    )
    print(f"term: {print_term(form, _names_for(closure.env))}")
    return 0


def cmd_arity(args, settings) -> int:
    closure, _ = _read_closure(args)
    a = infer_arity(closure.env, closure.subject)
    if a is None:
        print("arity: none")
        return 1
    print(f"arity: {format_arity(a)}")
    return 0


def cmd_check(args, settings) -> int:
    closure, _ = _read_closure(args)
    rep = check_valid(
        settings.domain, closure.env, closure.subject, settings.policy, settings.fuel
    )
    print(f"verdict: {rep.describe()}")
    return 0 if rep.is_valid else 1


def cmd_type(args, settings) -> int:
    closure, _ = _read_closure(args)
    rep = check_valid(
        settings.domain, closure.env, closure.subject, settings.policy, settings.fuel
    )
    if not rep.is_valid:
        print(f"verdict: {rep.describe()}")
        return 1
    ty = canonical_type(
        closure.env, closure.subject, 1, settings.policy, settings.fuel
    )
    print(f"term: {print_term(ty, _names_for(closure.env))}")
    return 0


def cmd_typecheck(args, settings) -> int:
    closure, names = _read_closure(args)
    against = parse_term_in_scope(args.against, names)
    rep = check_valid(
        settings.domain,
        closure.env,
        Cast(against, closure.subject),
        settings.policy,
        settings.fuel,
    )
    print(f"verdict: {rep.describe()}")
    return 0 if rep.is_valid else 1


def cmd_convert(args, settings) -> int:
    closure, names = _read_closure(args)
    against = parse_term_in_scope(args.against, names)
    try:
        n1_text, n2_text = args.bounds.split(",")
        n1, n2 = int(n1_text), int(n2_text)
    except ValueError:
        raise ValueError(f"bad --bounds spec: {args.bounds!r}") from None
    ok = rt_convertible(
        closure.env, closure.subject, n1, against, n2, settings.policy, settings.fuel
    )
    print(f"verdict: {'true' if ok else 'false'}")
    return 0 if ok else 1


def cmd_eta(args, settings) -> int:
    closure, _ = _read_closure(args)
    expanded = eta_expand_closure(closure, settings.policy, settings.fuel)
    _emit_env(expanded.env)
    print(f"term: {print_term(expanded.subject, _names_for(expanded.env))}")
    return 0


def cmd_report(args, settings) -> int:
    csv_path, png_path = report_module.write_report(
        args.out, args.seed, args.count, settings.policy
    )
    print(f"csv: {csv_path}")
    print(f"figure: {png_path}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lamrt",
        description="bounded rt-reduction kernel: reduce, normalize, and "
        "check closures",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, help_text, domain=False, closure=True):
        p = sub.add_parser(name, help=help_text)
        if closure:
            p.add_argument(
                "closure",
                nargs="?",
                help="closure text, e.g. 'x:*0 |- @(x).[y:*0].y'; "
                "stdin is read when omitted and --file is absent",
            )
            p.add_argument("--file", help="read the closure from a file")
        p.add_argument("--fuel", type=int, help="step allowance per loop")
        p.add_argument("--sorts", help="succ (default) or table:FILE")
        p.add_argument("--config", help="key=value file: domain, fuel, sorts")
        if domain:
            p.add_argument(
                "--domain",
                help="omega, empty, or set:n1,n2,... (default omega)",
            )
        p.set_defaults(handler=handler)
        return p

    add("parse", cmd_parse, "parse and echo a closure")
    p = add("reduce", cmd_reduce, "apply leftmost bound-0 steps")
    p.add_argument("--steps", type=int, default=1)
    add("whnf", cmd_whnf, "weak head normal form and its t-bound")
    p = add("nf", cmd_nf, "bound rt-normal form")
    p.add_argument("--rt-bound", type=int, default=0)
    add("arity", cmd_arity, "infer the arity")
    add("check", cmd_check, "validity at a domain", domain=True)
    add("type", cmd_type, "canonical expected type", domain=True)
    p = add("typecheck", cmd_typecheck, "check a term against a type", domain=True)
    p.add_argument("--against", required=True, help="the ascribed type")
    p = add("convert", cmd_convert, "bounded rt-convertibility")
    p.add_argument("--against", required=True, help="the second term")
    p.add_argument("--bounds", default="0,0", help="n1,n2 (default 0,0)")
    add("eta", cmd_eta, "one parallel eta-expansion pass")
    p = add("report", cmd_report, "run the eta survey corpus", closure=False)
    p.add_argument("--out", default="reports")
    p.add_argument("--seed", type=int, default=20260814)
    p.add_argument("--count", type=int, default=500)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        settings = _Settings(args)
        return args.handler(args, settings)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FuelExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (NoArity, Invalid, NoTypeStep, OpenHead, StuckApplication) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
