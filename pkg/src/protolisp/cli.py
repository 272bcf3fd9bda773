"""Command-line front end: repl, run and translate.

Exit codes: 0 success, 1 translation error (translate subcommand), 65 bad
input (parse errors, or input the selected kernel cannot represent), 70
runtime error, 74 I/O error.
"""

import argparse
import os
import sys
from pathlib import Path

from .errors import (
    CyclicStructureError,
    DuplicateDefinitionError,
    EvalError,
    ImproperStructureError,
    KindMismatchError,
    NameCollisionError,
    ParseError,
)
from .evaluator import (
    DEFAULT_MAX_DEPTH,
    Closure,
    Kernel,
    Primitive,
    default_env,
    eval_sexpr,
)
from .fexpr import Definition, read_program
from .sexpr import print_sexpr, read_sexprs
from .translate import name_symbol, translate
from .values import Dialect, ProperList, list_to_pair, pair_to_list

EX_OK = 0
EX_TRANSLATION = 1
EX_DATAERR = 65
EX_SOFTWARE = 70
EX_IOERR = 74

MAX_DEPTH_ENV_VAR = "AIM8_MAX_DEPTH"

_CONVERSION_ERRORS = (ImproperStructureError, CyclicStructureError, KindMismatchError)


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="protolisp",
        description="Two tiny Lisp kernels with an F-expression front end.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument(
            "--kernel",
            choices=["list", "pair"],
            default="list",
            help="value kernel: proper lists only, or unconstrained pairs",
        )
        p.add_argument(
            "--dialect",
            choices=["aim8", "classic"],
            default=None,
            help="S-expression notation (default: aim8 for the list kernel, "
            "classic for the pair kernel)",
        )
        p.add_argument(
            "--lang",
            choices=["mexpr", "sexpr"],
            default=None,
            help="source language (default: by file extension; mexpr in the repl)",
        )
        p.add_argument(
            "--max-depth",
            type=int,
            default=None,
            metavar="N",
            help=f"evaluation depth limit (default {DEFAULT_MAX_DEPTH}, "
            f"or ${MAX_DEPTH_ENV_VAR})",
        )

    p_repl = sub.add_parser("repl", help="interactive prompt")
    add_common(p_repl)
    p_repl.set_defaults(func=cmd_repl)

    p_run = sub.add_parser("run", help="run a program file")
    p_run.add_argument("file")
    add_common(p_run)
    p_run.set_defaults(func=cmd_run)

    p_tr = sub.add_parser(
        "translate", help="print S-expression translations of an .mexp file"
    )
    p_tr.add_argument("file")
    add_common(p_tr)
    p_tr.set_defaults(func=cmd_translate)

    return parser


def _resolve_max_depth(args) -> int:
    if args.max_depth is not None:
        return args.max_depth
    from_env = os.environ.get(MAX_DEPTH_ENV_VAR)
    if from_env:
        try:
            return int(from_env)
        except ValueError:
            print(
                f"ignoring non-numeric {MAX_DEPTH_ENV_VAR}={from_env!r}",
                file=sys.stderr,
            )
    return DEFAULT_MAX_DEPTH


def _resolve_dialect(args, kernel: Kernel) -> Dialect:
    if args.dialect is not None:
        return Dialect(args.dialect)
    return Dialect.AIM8 if kernel is Kernel.LIST else Dialect.CLASSIC


def _to_kernel(value, kernel: Kernel, dialect: Dialect):
    """Carry a freshly read S-expression into the active kernel."""
    if kernel is Kernel.LIST:
        return value if dialect is Dialect.AIM8 else pair_to_list(value)
    return list_to_pair(value) if dialect is Dialect.AIM8 else value


def _render(value, kernel: Kernel, dialect: Dialect) -> str:
    if isinstance(value, (Closure, Primitive)):
        return repr(value)
    if kernel is Kernel.LIST:
        if dialect is Dialect.AIM8:
            return print_sexpr(value, Dialect.AIM8)
        return print_sexpr(list_to_pair(value), Dialect.CLASSIC)
    if dialect is Dialect.CLASSIC:
        return print_sexpr(value, Dialect.CLASSIC)
    return print_sexpr(pair_to_list(value), Dialect.AIM8)


def _translated_form(item, kernel: Kernel):
    """Translate one program item into an expression of the active kernel."""
    form = translate(item)
    return list_to_pair(form) if kernel is Kernel.PAIR else form


def cmd_run(args) -> int:
    kernel = Kernel(args.kernel)
    dialect = _resolve_dialect(args, kernel)
    max_depth = _resolve_max_depth(args)
    path = Path(args.file)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        print(f"{args.file}: {e.strerror or e}", file=sys.stderr)
        return EX_IOERR
    lang = args.lang or ("sexpr" if path.suffix == ".sexp" else "mexpr")

    env = default_env(kernel)
    last = None
    have_result = False
    try:
        if lang == "mexpr":
            items = read_program(text)
        else:
            items = read_sexprs(text, dialect)
    except ParseError as e:
        print(f"{args.file}:{e}", file=sys.stderr)
        return EX_DATAERR

    seen_names = set()
    for item in items:
        try:
            if lang == "mexpr":
                if isinstance(item, Definition):
                    if item.name in seen_names:
                        raise DuplicateDefinitionError(
                            f"duplicate definition of {item.name!r}"
                        )
                    seen_names.add(item.name)
                    sym = name_symbol(item.name)
                    form = _translated_form(item.body, kernel)
                    value = eval_sexpr(form, env, kernel, max_depth)
                    env = env.extend([(sym, value)])
                    continue
                form = _translated_form(item, kernel)
            else:
                form = _to_kernel(item, kernel, dialect)
        except (NameCollisionError, DuplicateDefinitionError) as e:
            print(f"{args.file}: {e}", file=sys.stderr)
            return EX_DATAERR
        except _CONVERSION_ERRORS as e:
            print(f"{args.file}: {e}", file=sys.stderr)
            return EX_DATAERR
        try:
            last = eval_sexpr(form, env, kernel, max_depth)
            have_result = True
        except EvalError as e:
            print(str(e), file=sys.stderr)
            return EX_SOFTWARE
    if have_result:
        try:
            print(_render(last, kernel, dialect))
        except _CONVERSION_ERRORS as e:
            print(str(e), file=sys.stderr)
            return EX_SOFTWARE
    return EX_OK


def cmd_translate(args) -> int:
    dialect = Dialect(args.dialect) if args.dialect else Dialect.AIM8
    try:
        text = Path(args.file).read_text(encoding="utf-8")
    except OSError as e:
        print(f"{args.file}: {e.strerror or e}", file=sys.stderr)
        return EX_IOERR
    try:
        items = read_program(text)
    except ParseError as e:
        print(f"{args.file}:{e}", file=sys.stderr)
        return EX_DATAERR
    seen = set()
    lines = []
    try:
        for item in items:
            if isinstance(item, Definition):
                if item.name in seen:
                    raise DuplicateDefinitionError(
                        f"duplicate definition of {item.name!r}"
                    )
                seen.add(item.name)
                out = ProperList((name_symbol(item.name), translate(item.body)))
            else:
                out = translate(item)
            if dialect is Dialect.CLASSIC:
                lines.append(print_sexpr(list_to_pair(out), Dialect.CLASSIC))
            else:
                lines.append(print_sexpr(out, Dialect.AIM8))
    except (NameCollisionError, DuplicateDefinitionError) as e:
        print(f"{args.file}: {e}", file=sys.stderr)
        return EX_TRANSLATION
    for line in lines:
        print(line)
    return EX_OK


def cmd_repl(args) -> int:
    kernel = Kernel(args.kernel)
    dialect = _resolve_dialect(args, kernel)
    max_depth = _resolve_max_depth(args)
    lang = args.lang or "mexpr"
    env = default_env(kernel)
    interactive = sys.stdin.isatty()
    prompt = "> " if interactive else ""
    while True:
        try:
            line = input(prompt)
        except EOFError:
            if interactive:
                print()
            return EX_OK
        except KeyboardInterrupt:
            print(file=sys.stderr)
            continue
        except OSError:
            return EX_IOERR
        if not line.strip():
            continue
        try:
            if lang == "mexpr":
                items = read_program(line)
                for item in items:
                    if isinstance(item, Definition):
                        sym = name_symbol(item.name)
                        form = _translated_form(item.body, kernel)
                        value = eval_sexpr(form, env, kernel, max_depth)
                        env = env.extend([(sym, value)])
                    else:
                        form = _translated_form(item, kernel)
                        value = eval_sexpr(form, env, kernel, max_depth)
                        print(_render(value, kernel, dialect))
            else:
                for read_value in read_sexprs(line, dialect):
                    form = _to_kernel(read_value, kernel, dialect)
                    value = eval_sexpr(form, env, kernel, max_depth)
                    print(_render(value, kernel, dialect))
        except (ParseError, EvalError, NameCollisionError) as e:
            print(str(e), file=sys.stderr)
        except _CONVERSION_ERRORS as e:
            print(str(e), file=sys.stderr)
    return EX_OK


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    return args.func(args)
