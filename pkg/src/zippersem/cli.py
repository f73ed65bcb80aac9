"""Command line front end.

Subcommands: parse, run, compile, tauclose, and check (sim, closure,
regular, tausim).  Reports go to standard output, diagnostics to standard
error.  Exit codes: 0 success, 2 parse or input errors, 3 stuck execution,
4 step limit reached, 5 property violation.
"""

import argparse
import json
import sys

from . import formats
from .ast import ParseError, is_valid_name, parse_program, parse_value_literal
from .ast import print_program
from .automaton import (check_simulation, edges_closed, is_regular,
                        nodes_closed, program_automaton, step_image_closed)
from .semantics import STEP_LIMIT, STUCK, TERMINATED, run_trace
from .tauclose import check_tau_simulation, close_automaton

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_STUCK = 3
EXIT_STEP_LIMIT = 4
EXIT_VIOLATION = 5

_STATUS_EXIT = {TERMINATED: EXIT_OK, STUCK: EXIT_STUCK, STEP_LIMIT: EXIT_STEP_LIMIT}


def _read_program(path):
    with open(path, encoding="utf-8") as fh:
        return parse_program(fh.read())


def _load_automaton_file(path):
    with open(path, encoding="utf-8") as fh:
        return formats.load_automaton(json.load(fh))


def _parse_state(text):
    """Parse 'x=true,y=null' into a state dict."""
    state = {}
    if not text:
        return state
    for part in text.split(","):
        part = part.strip()
        name, eq, lit = part.partition("=")
        name = name.strip()
        if not eq or not is_valid_name(name):
            raise ValueError(f"bad state entry {part!r}, expected name=literal")
        state[name] = parse_value_literal(lit.strip())
    return state


def _emit(text, out_path):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_parse(args):
    c = _read_program(args.file)
    if args.ast:
        print(repr(c))
    else:
        print(print_program(c))
    return EXIT_OK


def cmd_run(args):
    c = _read_program(args.file)
    state = _parse_state(args.state)
    trace = run_trace(c, state, args.max_steps)
    if args.trace_format == "json":
        sys.stdout.write(formats.to_json_text(formats.trace_json(trace)))
        print(f"status: {trace.status}", file=sys.stderr)
    else:
        sys.stdout.write(formats.trace_text(trace))
        line = f"status: {trace.status}"
        if trace.stuck_reason:
            line += f" ({trace.stuck_reason})"
        print(line)
    return _STATUS_EXIT[trace.status]


def cmd_compile(args):
    aut = program_automaton(_read_program(args.file))
    if args.numbered:
        numbered = formats.rename_nodes(aut)
        if args.format == "dot":
            labels = {i: f"{i}: {numbered.legend[i]}"
                      for i in numbered.automaton.nodes}
            text = formats.automaton_dot(numbered.automaton, labels)
        else:
            text = formats.to_json_text(formats.numbered_automaton_json(numbered))
    elif args.format == "dot":
        text = formats.automaton_dot(aut)
    else:
        text = formats.to_json_text(formats.program_automaton_json(aut))
    _emit(text, args.output)
    return EXIT_OK


def cmd_tauclose(args):
    if args.automaton:
        base = _load_automaton_file(args.automaton)
    else:
        base = program_automaton(_read_program(args.file))
    if not is_regular(base):
        print("warning: input automaton is not regular "
              "(initial node or an edge endpoint is outside the node list)",
              file=sys.stderr)
    closed = close_automaton(base)
    if args.format == "dot":
        text = formats.automaton_dot(closed, formats.closed_labels(base, closed))
    else:
        text = formats.to_json_text(formats.closed_automaton_json(base, closed))
    _emit(text, args.output)
    return EXIT_OK


def cmd_check(args):
    if args.kind == "sim":
        c = _read_program(args.file)
        report = check_simulation(c, _parse_state(args.state), args.max_steps)
        print(f"sim: {report.steps_checked} steps matched, trace status "
              f"{report.status}")
        if not report.ok:
            i, cfg, nxt = report.violation
            print(f"violation at step {i}: no edge from "
                  f"{formats.render_node(cfg.cursor)} to "
                  f"{formats.render_node(nxt.cursor)} with matching action")
            return EXIT_VIOLATION
        return EXIT_OK
    if args.kind == "closure":
        aut = program_automaton(_read_program(args.file))
        checks = [("nodes closed", nodes_closed(aut)),
                  ("edges closed", edges_closed(aut)),
                  ("step image closed", step_image_closed(aut))]
        for name, value in checks:
            print(f"{name}: {'ok' if value else 'FAIL'}")
        return EXIT_OK if all(v for _, v in checks) else EXIT_VIOLATION
    if args.kind == "regular":
        aut = _input_automaton(args)
        ok = is_regular(aut)
        print(f"regular: {'ok' if ok else 'FAIL'}")
        return EXIT_OK if ok else EXIT_VIOLATION
    # tausim
    aut = _input_automaton(args)
    if not is_regular(aut):
        print("warning: input automaton is not regular", file=sys.stderr)
    report = check_tau_simulation(aut, close_automaton(aut))
    print(f"tausim: {report.checked_pairs} related pairs checked, "
          f"{'ok' if report.ok else 'FAIL'}")
    if not report.ok:
        s1, s2, edge, reason = report.violation
        print(f"violation: {reason}"
              + (f" (node {formats.render_node(s1)} in {formats.render_node(s2)},"
                 f" edge to {formats.render_node(edge.dest)})" if edge else ""))
        return EXIT_VIOLATION
    return EXIT_OK


def _input_automaton(args):
    if args.automaton:
        return _load_automaton_file(args.automaton)
    return program_automaton(_read_program(args.file))


def build_parser():
    parser = argparse.ArgumentParser(
        prog="zippersem",
        description="Explore a tiny imperative language: run its small-step "
                    "semantics, compile programs to program-point automata, "
                    "remove silent transitions, and check the expected "
                    "properties.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="parse a program and print it back")
    p.add_argument("file")
    p.add_argument("--ast", action="store_true",
                   help="print the syntax tree instead of concrete syntax")
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("run", help="run a program and print the trace")
    p.add_argument("file")
    p.add_argument("--state", default="",
                   help="initial state, e.g. x=true,y=null")
    p.add_argument("--max-steps", type=int, default=10000)
    p.add_argument("--trace-format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("compile", help="compile a program to its automaton")
    p.add_argument("file")
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.add_argument("--numbered", action="store_true",
                   help="rename nodes to integer ids with a legend")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_compile)

    p = sub.add_parser("tauclose",
                       help="close a program automaton or a JSON automaton "
                            "over silent transitions")
    p.add_argument("file", nargs="?")
    p.add_argument("--automaton", help="automaton JSON file instead of a program")
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_tauclose)

    p = sub.add_parser("check", help="run one of the property checkers")
    p.add_argument("kind", choices=["sim", "closure", "regular", "tausim"])
    p.add_argument("file", nargs="?")
    p.add_argument("--automaton",
                   help="automaton JSON file (regular and tausim only)")
    p.add_argument("--state", default="")
    p.add_argument("--max-steps", type=int, default=10000)
    p.set_defaults(func=cmd_check)

    return parser


def main(argv=None) -> int:
    sys.setrecursionlimit(20000)
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "file", True) is None and not getattr(args, "automaton", None):
        parser.error(f"{args.command}: need a program file or --automaton")
    if getattr(args, "automaton", None) and args.command == "check" \
            and args.kind in ("sim", "closure"):
        parser.error("check sim/closure work on programs, not --automaton")
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def console():
    sys.exit(main())
