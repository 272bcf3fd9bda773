"""Exception types shared across the package."""

import enum


class LispError(Exception):
    """Base class for everything this package raises on purpose."""


class ImproperStructureError(LispError):
    """A pair chain ends at an atom other than NIL where a list was needed."""


class CyclicStructureError(LispError):
    """A pair structure loops back on itself where a finite list was needed."""


class KindMismatchError(LispError):
    """A value of one kernel was handed to a printer for the other."""


class NameCollisionError(LispError):
    """Uppercasing a variable would collide with a reserved head atom."""


class DuplicateDefinitionError(LispError):
    """Two definitions in one program share a name."""


class ParseErrorKind(enum.Enum):
    UNEXPECTED_CHAR = "unexpected character"
    UNBALANCED_PAREN = "unbalanced parenthesis"
    DOT_MISUSE = "dot misuse"
    EMPTY_INPUT = "empty input"
    TRAILING_INPUT = "trailing input"
    RESERVED_WORD = "reserved word misuse"
    MIXED_CASE = "mixed-case identifier"


class ParseError(LispError):
    """Reader failure, carrying a 1-based source position.

    The message always starts with a fixed prefix determined by `kind`.
    """

    def __init__(self, kind, position, detail=""):
        self.kind = kind
        self.position = position
        self.message = kind.value + (f": {detail}" if detail else "")
        super().__init__(f"{position}: {self.message}")


class KernelKind(enum.Enum):
    UNDEFINED_ON_NULL = "undefined on the null list"
    UNDEFINED_ON_ATOM = "undefined on atoms"
    ATOMIC_SECOND_ARG = "second argument is atomic"
    NOT_A_SYMBOL = "arguments must be atomic symbols"


class KernelError(LispError):
    """A kernel operation was applied outside its domain."""

    def __init__(self, kind, operation, offending):
        self.kind = kind
        self.operation = operation
        self.offending = offending
        super().__init__(f"{operation}: {kind.value}")


class Fault(enum.Enum):
    UNBOUND = "unbound"
    ARITY = "arity"
    NOT_CALLABLE = "not callable"
    KERNEL_FAULT = "kernel fault"
    COND_EXHAUSTED = "cond exhausted"
    DEPTH_EXCEEDED = "depth exceeded"
    BAD_TRUTH_VALUE = "bad truth value"
    MALFORMED = "malformed"


class EvalError(LispError):
    """Evaluation failure.

    `kind` is one of the Fault members; `trace` holds the innermost
    expressions that were under evaluation when the fault was raised,
    outermost first.  For KERNEL_FAULT the originating KernelError is
    kept in `kernel_error` and the message is taken from it verbatim.
    """

    def __init__(self, kind, detail, trace=(), kernel_error=None):
        self.kind = kind
        self.detail = detail
        self.trace = tuple(trace)
        self.kernel_error = kernel_error
        super().__init__(detail)
