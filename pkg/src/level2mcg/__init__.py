"""Level-2 mapping class group of a non-orientable surface: generators, the mod-2
Johnson homomorphism and the GF(2) rank computations behind its abelianization."""

from .catalog import McgExpr, parse_expr, theorem_generators
from .freegroup import SubstEndo, Word
from .johnson import rank_suite, tau1
from .tensor import HClass, Tensor

__all__ = [
    "HClass",
    "McgExpr",
    "SubstEndo",
    "Tensor",
    "Word",
    "parse_expr",
    "rank_suite",
    "tau1",
    "theorem_generators",
]
