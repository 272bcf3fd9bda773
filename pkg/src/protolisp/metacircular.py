"""The interpreter written in its own language.

assets/universal.mexp defines, as five F-expression definitions, an
evaluator for the translated S-language over the list kernel.  Loading
parses and translates those definitions; meta_eval runs a quoted program
through that evaluator, which itself runs on the host interpreter with an
empty meta-environment.  assets/universal.sexp is the frozen translation,
kept for comparison so the shipped source and its S-form cannot drift.

The meta evaluator has no closure objects of its own: abstractions and
recursion forms evaluate to themselves and are applied as expressions, and
meta-environments are association lists of two-element lists.  Programs
whose value is plain data therefore evaluate to the same value under
meta_eval and under the host directly.  Errors at the meta level (an
unbound meta-variable, say) surface as whatever host fault the stuck
kernel operation raises.
"""

from importlib import resources

from .errors import LispError
from .evaluator import DEFAULT_MAX_DEPTH, Env, Kernel, default_env, eval_sexpr
from .fexpr import Definition, read_program
from .translate import translate_program
from .values import NULL, ProperList, Symbol

_METAEVAL = Symbol("METAEVAL")
_QUOTE = Symbol("QUOTE")


def _asset_text(name: str) -> str:
    return (resources.files(__package__) / "assets" / name).read_text(
        encoding="utf-8"
    )


def load_universal():
    """Parse and translate the shipped evaluator definitions.

    Returns the (name atom, translated body) pairs in definition order.
    """
    items = read_program(_asset_text("universal.mexp"))
    defs = []
    for item in items:
        if not isinstance(item, Definition):
            raise LispError("universal.mexp must contain definitions only")
        defs.append((item.name, item.body))
    return translate_program(defs)


def universal_env(max_depth=DEFAULT_MAX_DEPTH) -> Env:
    """The list-kernel environment with the meta definitions bound."""
    env = default_env(Kernel.LIST)
    for name, form in load_universal():
        value = eval_sexpr(form, env, Kernel.LIST, max_depth)
        env = env.extend([(name, value)])
    return env


def meta_eval(expr, env=None, max_depth=DEFAULT_MAX_DEPTH):
    """Evaluate a list-kernel program with the meta evaluator.

    Builds (METAEVAL, (QUOTE, expr), (QUOTE, ())) and hands it to the
    host.  Pass env=universal_env() to amortize loading over many calls.
    """
    if env is None:
        env = universal_env(max_depth)
    program = ProperList(
        (
            _METAEVAL,
            ProperList((_QUOTE, expr)),
            ProperList((_QUOTE, NULL)),
        )
    )
    return eval_sexpr(program, env, Kernel.LIST, max_depth)
