"""
Command-line front end.

Every command writes deterministic text to standard output. Exit statuses:
0 success, 1 inequivalent expressions or failed verification, 2 usage
error, 3 any other error (reported on standard error).
"""
import argparse
import re
import sys
import traceback
from functools import wraps
from pathlib import Path
from typing import Dict, List, Optional, Sequence, TextIO

from src import config
from ..expr.evaluator import evaluate
from ..expr.parser import parse
from ..expr.printer import pretty_print
from ..models.expr import Expr
from ..models.rule import TraceStep
from ..models.truth_table import Counterexample
from ..netlist.emitters import emit_dot, emit_json
from ..netlist.lowering import lower
from ..rewrite.simplifier import simplify
from ..stdcells.census import monadic_census
from ..stdcells.laws import check_laws
from ..stdcells.library import CIRCUIT_DEFINITIONS, cell, circuit
from ..stdcells.verification import verify_all
from ..synth.regular_formula import synthesize
from ..truthtab.formats import format_rows, format_table, parse_table
from ..truthtab.tables import equivalent, table_of
from ..utils.exceptions import CommandError, TernaryError
from ..utils.formatting import format_census, format_counterexample, format_law_report
from ..utils.logger import CustomLogger
from ..utils.validators import is_valid_identifier

logger = CustomLogger("CommandHandler")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_ERROR = 3

_SEPARATORS = re.compile(r'[\s,]+')


def handle_command_errors(func):
    """Decorator mapping errors raised by a command to an exit status"""
    @wraps(func)
    def wrapper(self, args, *rest, **kwargs):
        try:
            return func(self, args, *rest, **kwargs)
        except TernaryError as e:
            logger.warning(f"{type(e).__name__} in {func.__name__}: {str(e)}")
            self.err.write(f"error: {str(e)}\n")
            return EXIT_ERROR
        except Exception as e:
            logger.error(f"Unexpected error in {func.__name__}: {str(e)}\n{traceback.format_exc()}")
            self.err.write(f"error: unexpected {type(e).__name__}: {str(e)}\n")
            return EXIT_ERROR
    return wrapper


def read_argument(text: str) -> str:
    """Argument text, or the contents of the file it names with a leading '@'."""
    if not text.startswith('@'):
        return text
    path = Path(text[1:])
    try:
        return path.read_text(encoding='utf-8')
    except OSError as e:
        raise CommandError(f"Cannot read {path}: {e.strerror or e}")


def parse_assignment(pairs: Sequence[str]) -> Dict[str, int]:
    env: Dict[str, int] = {}
    for pair in pairs or ():
        name, sep, value = pair.partition('=')
        name, value = name.strip(), value.strip()
        if not sep or not is_valid_identifier(name) or value not in ('0', '1', '2'):
            raise CommandError(f"Expected NAME=0|1|2, got '{pair}'")
        env[name] = int(value)
    return env


def parse_named_expressions(items: Sequence[str]) -> Dict[str, Expr]:
    named: Dict[str, Expr] = {}
    for item in items:
        name, sep, text = item.partition('=')
        if not sep:
            name, text = 'out', item
        name = name.strip()
        if not is_valid_identifier(name):
            raise CommandError(f"Invalid output name '{name}'")
        if name in named:
            raise CommandError(f"Output '{name}' given twice")
        named[name] = parse(read_argument(text))
    return named


class CommandHandler:
    def __init__(self, out: TextIO, err: TextIO):
        self.out = out
        self.err = err

    def emit(self, text: str = "") -> None:
        self.out.write(text + "\n")

    def emit_lines(self, lines: Sequence[str]) -> None:
        for line in lines:
            self.emit(line)

    @handle_command_errors
    def handle_eval(self, args) -> int:
        e = parse(read_argument(args.expression))
        self.emit(str(int(evaluate(e, parse_assignment(args.set)))))
        return EXIT_OK

    @handle_command_errors
    def handle_table(self, args) -> int:
        e = parse(read_argument(args.expression))
        var_order = [name for name in _SEPARATORS.split(args.vars.strip()) if name] if args.vars else None
        table = table_of(e, var_order, limit=args.max_arity)
        self.emit(format_rows(table) if args.rows else format_table(table))
        return EXIT_OK

    @handle_command_errors
    def handle_synth(self, args) -> int:
        table = parse_table(self._table_source(args.table))
        e = synthesize(table)
        if args.simplify:
            e = simplify(e, budget=args.budget)
        self.emit(pretty_print(e))
        return EXIT_OK

    @staticmethod
    def _table_source(source: str) -> str:
        if source.startswith('@') or 'vars:' in source:
            return read_argument(source)
        return read_argument('@' + source)

    @handle_command_errors
    def handle_simplify(self, args) -> int:
        e = parse(read_argument(args.expression))
        trace: Optional[List[TraceStep]] = [] if args.trace else None
        result = simplify(e, budget=args.budget, trace=trace)
        for step in trace or ():
            self.emit(str(step))
        self.emit(pretty_print(result))
        return EXIT_OK

    @handle_command_errors
    def handle_equiv(self, args) -> int:
        a = parse(read_argument(args.a))
        b = parse(read_argument(args.b))
        result = equivalent(a, b, limit=args.max_arity)
        if isinstance(result, Counterexample):
            self.emit(format_counterexample(result))
            return EXIT_FAILED
        self.emit("EQUAL")
        return EXIT_OK

    @handle_command_errors
    def handle_dot(self, args) -> int:
        self.out.write(emit_dot(lower(parse_named_expressions(args.outputs))))
        return EXIT_OK

    @handle_command_errors
    def handle_json(self, args) -> int:
        self.emit(emit_json(lower(parse_named_expressions(args.outputs))))
        return EXIT_OK

    @handle_command_errors
    def handle_stdcell(self, args) -> int:
        name = args.name.upper()
        if name in CIRCUIT_DEFINITIONS:
            outputs = circuit(name)
            tables = {output: cell(member).reference_table for output, member in CIRCUIT_DEFINITIONS[name].items()}
        else:
            c = cell(name)
            outputs = {"out": c.expr}
            tables = {"out": c.reference_table}

        if args.dot:
            self.out.write(emit_dot(lower(outputs)))
        elif args.json:
            self.emit(emit_json(lower(outputs)))
        elif args.table:
            if list(outputs) == ["out"]:
                self.emit(format_table(tables["out"]))
            else:
                for output in outputs:
                    self.emit(f"{output}:")
                    self.emit(format_table(tables[output]))
        elif list(outputs) == ["out"]:
            self.emit(pretty_print(outputs["out"]))
        else:
            for output, e in outputs.items():
                self.emit(f"{output}={pretty_print(e)}")
        return EXIT_OK

    @handle_command_errors
    def handle_census(self, args) -> int:
        census = monadic_census()
        self.emit_lines(format_census(census))
        return EXIT_OK if census.passed else EXIT_FAILED

    @handle_command_errors
    def handle_verify(self, args) -> int:
        report = verify_all()
        self.emit_lines(str(check) for check in report.checks)
        laws = check_laws()
        self.emit_lines(format_law_report(laws))
        passed = report.passed and laws.passed
        self.emit("verification passed" if passed else "verification FAILED")
        return EXIT_OK if passed else EXIT_FAILED


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got '{text}'")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def build_parser(handler: CommandHandler) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ternary",
        description="Ternary logic toolkit: evaluate, tabulate, synthesize, simplify and lower expressions.",
    )
    commands = parser.add_subparsers(dest="command", metavar="COMMAND")
    commands.required = True

    p = commands.add_parser("eval", help="evaluate an expression under an assignment")
    p.add_argument("expression", help="expression text or @file")
    p.add_argument("--set", action="append", default=[], metavar="NAME=VALUE", help="bind a variable")
    p.set_defaults(handler=handler.handle_eval)

    p = commands.add_parser("table", help="print the truth table of an expression")
    p.add_argument("expression", help="expression text or @file")
    p.add_argument("--vars", help="variable order, comma or space separated (default: sorted free variables)")
    p.add_argument("--rows", action="store_true", help="print one 'inputs -> output' line per row")
    p.add_argument("--max-arity", type=_positive, default=None,
                   help=f"enumeration limit (default {config.ARITY_LIMIT})")
    p.set_defaults(handler=handler.handle_table)

    p = commands.add_parser("synth", help="regular formula of a truth table")
    p.add_argument("table", help="table file, @file, or inline table text")
    p.add_argument("--simplify", action="store_true", help="simplify the synthesized expression")
    p.add_argument("--budget", type=_positive, default=None,
                   help=f"simplification passes (default {config.SIMPLIFY_BUDGET})")
    p.set_defaults(handler=handler.handle_synth)

    p = commands.add_parser("simplify", help="simplify an expression")
    p.add_argument("expression", help="expression text or @file")
    p.add_argument("--budget", type=_positive, default=None,
                   help=f"simplification passes (default {config.SIMPLIFY_BUDGET})")
    p.add_argument("--trace", action="store_true", help="list the applied rewrites")
    p.set_defaults(handler=handler.handle_simplify)

    p = commands.add_parser("equiv", help="check two expressions for equivalence")
    p.add_argument("a", help="expression text or @file")
    p.add_argument("b", help="expression text or @file")
    p.add_argument("--max-arity", type=_positive, default=None,
                   help=f"enumeration limit (default {config.ARITY_LIMIT})")
    p.set_defaults(handler=handler.handle_equiv)

    for name, method, description in (("dot", handler.handle_dot, "Graphviz DOT netlist"),
                                      ("json", handler.handle_json, "JSON netlist")):
        p = commands.add_parser(name, help=f"{description} of named expressions")
        p.add_argument("outputs", nargs="+", metavar="NAME=EXPR", help="output name and expression")
        p.set_defaults(handler=method)

    p = commands.add_parser("stdcell", help="show a library cell or circuit")
    p.add_argument("name", help="cell name such as STI, TNAND or THA")
    view = p.add_mutually_exclusive_group()
    view.add_argument("--table", action="store_true", help="reference truth table")
    view.add_argument("--expr", action="store_true", help="expression (default)")
    view.add_argument("--dot", action="store_true", help="netlist as Graphviz DOT")
    view.add_argument("--json", action="store_true", help="netlist as JSON")
    p.set_defaults(handler=handler.handle_stdcell)

    p = commands.add_parser("census", help="monadic coverage of the constant-composed forms")
    p.set_defaults(handler=handler.handle_census)

    p = commands.add_parser("verify", help="verify the cell library and the law suite")
    p.set_defaults(handler=handler.handle_verify)
    return parser


def run(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None, err: Optional[TextIO] = None) -> int:
    """Parse `argv`, dispatch the command and return its exit status."""
    handler = CommandHandler(out or sys.stdout, err or sys.stderr)
    parser = build_parser(handler)
    try:
        args = parser.parse_args(list(sys.argv[1:] if argv is None else argv))
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK
    logger.debug(f"Running command {args.command}")
    return args.handler(args)
