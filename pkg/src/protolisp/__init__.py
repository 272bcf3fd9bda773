"""Two tiny Lisp kernels, an F-expression front end, and a meta-circular evaluator.

See README.md for an overview.  The pieces:

    values        the two value models and the mappings between them
    kernel_list   first/rest/combine over proper lists only
    kernel_pair   cons/car/cdr over unconstrained pairs
    sexpr         reading and printing S-expressions (aim8 and classic)
    fexpr         the bracket-and-semicolon program notation
    translate     F-expressions down to list-kernel S-expressions
    evaluator     the interpreter, parameterized by kernel
    metacircular  the evaluator written in its own language
    cli           repl / run / translate
"""

from .errors import (
    CyclicStructureError,
    DuplicateDefinitionError,
    EvalError,
    Fault,
    ImproperStructureError,
    KernelError,
    KernelKind,
    KindMismatchError,
    LispError,
    NameCollisionError,
    ParseError,
    ParseErrorKind,
)
from .evaluator import (
    DEFAULT_MAX_DEPTH,
    Closure,
    Env,
    F,
    Kernel,
    Primitive,
    T,
    apply_fn,
    default_env,
    eval_fexpr,
    eval_sexpr,
)
from .fexpr import (
    App,
    Cond,
    Const,
    Definition,
    Label,
    Lambda,
    Var,
    print_fexpr,
    read_fexpr,
    read_program,
)
from .metacircular import load_universal, meta_eval, universal_env
from .sexpr import print_sexpr, read_sexpr, read_sexprs
from .translate import translate, translate_program
from .values import (
    NIL,
    NULL,
    Dialect,
    Pair,
    ProperList,
    Symbol,
    equal_values,
    list_to_pair,
    pair_to_list,
    unsafe_set_tail,
)

__all__ = [
    "App",
    "Closure",
    "Cond",
    "Const",
    "CyclicStructureError",
    "DEFAULT_MAX_DEPTH",
    "Definition",
    "Dialect",
    "DuplicateDefinitionError",
    "Env",
    "EvalError",
    "F",
    "Fault",
    "ImproperStructureError",
    "Kernel",
    "KernelError",
    "KernelKind",
    "KindMismatchError",
    "Label",
    "Lambda",
    "LispError",
    "NIL",
    "NULL",
    "NameCollisionError",
    "Pair",
    "ParseError",
    "ParseErrorKind",
    "Primitive",
    "ProperList",
    "Symbol",
    "T",
    "Var",
    "apply_fn",
    "default_env",
    "equal_values",
    "eval_fexpr",
    "eval_sexpr",
    "list_to_pair",
    "load_universal",
    "meta_eval",
    "pair_to_list",
    "print_fexpr",
    "print_sexpr",
    "read_fexpr",
    "read_program",
    "read_sexpr",
    "read_sexprs",
    "translate",
    "translate_program",
    "universal_env",
    "unsafe_set_tail",
]

__version__ = "0.1.0"
