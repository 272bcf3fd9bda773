"""Translation from F-expressions to list-kernel S-expressions.

The step is pure notation: variables uppercase into atoms, constants are
wrapped under QUOTE, and the three program forms become lists headed by
COND, LAMBDA and LABEL.  Because the four head atoms QUOTE, COND, LAMBDA
and LABEL carry meaning in the target language, a variable whose
uppercased spelling is one of them is refused.
"""

from .errors import DuplicateDefinitionError, NameCollisionError
from .fexpr import App, Cond, Const, Label, Lambda, Var
from .values import ProperList, Symbol

RESERVED_HEADS = frozenset({"QUOTE", "COND", "LAMBDA", "LABEL"})

_QUOTE = Symbol("QUOTE")
_COND = Symbol("COND")
_LAMBDA = Symbol("LAMBDA")
_LABEL = Symbol("LABEL")


def name_symbol(name: str) -> Symbol:
    """Uppercase a variable or definition name into its atom."""
    upper = name.upper()
    if upper in RESERVED_HEADS:
        raise NameCollisionError(
            f"name {name!r} uppercases to the reserved atom {upper}"
        )
    return Symbol(upper)


def translate(e) -> ProperList:
    """Translate one F-expression; the result is always a proper structure."""
    match e:
        case Var(name):
            return name_symbol(name)
        case Const(value):
            return ProperList((_QUOTE, value))
        case App(fn, args):
            return ProperList(
                (translate(fn),) + tuple(translate(a) for a in args)
            )
        case Cond(clauses):
            return ProperList(
                (_COND,)
                + tuple(
                    ProperList((translate(t), translate(r))) for t, r in clauses
                )
            )
        case Lambda(params, body):
            return ProperList(
                (
                    _LAMBDA,
                    ProperList(tuple(name_symbol(p) for p in params)),
                    translate(body),
                )
            )
        case Label(name, body):
            return ProperList((_LABEL, name_symbol(name), translate(body)))
    raise TypeError(f"not an F-expression: {e!r}")


def translate_program(definitions):
    """Translate (name, fexpr) pairs; names must be distinct."""
    seen = set()
    out = []
    for name, body in definitions:
        if name in seen:
            raise DuplicateDefinitionError(f"duplicate definition of {name!r}")
        seen.add(name)
        out.append((name_symbol(name), translate(body)))
    return out
