"""Exact truncated q-series arithmetic, an eta-quotient expression DSL,
combinatorial oracles, and a coefficientwise identity verification harness.

The pieces:

* :mod:`qeta.series`  -- Series: exact integer coefficients up to a
  truncation order, with ring operations, dissection (extract/inflate),
  shifting, and modular reduction.
* :mod:`qeta.eta`     -- pentagonal-number expansion of the Euler products f_r.
* :mod:`qeta.dsl`     -- the expression language all identities are written
  in: parse, evaluate, format_expr.
* :mod:`qeta.oracles` -- independent dynamic programs for p(n),
  overpartitions, a(n) (two definitions), and the theta indicator g(n).
* :mod:`qeta.verify`  -- identity/congruence checks returning Reports.
* :mod:`qeta.corpus`  -- the line-oriented corpus format and the shipped
  corpus of identities.
* :mod:`qeta.cli`     -- the ``qeta`` command.
"""

from .errors import (
    CorpusError,
    DomainError,
    ExprSyntaxError,
    NegativeValuationError,
    NonExactDivisionError,
    NotAUnitError,
    NotPrimeError,
    OutOfRangeError,
    QetaError,
)
from .series import Series
from .eta import expand_f, pentagonal_numbers
from .dsl import (
    Add, Div, Extract, FAtom, Inflate, IntLiteral, ModRed, Mul, Neg, Pow,
    QPower, Sub, ExprAST, evaluate, format_expr, parse,
)
from .oracles import (
    ADefinition, OracleKind, OracleTable,
    a_oracle, g_oracle, oracle_by_name, overp_oracle, p_oracle,
)
from .verify import (
    CheckKind, IdentityCheck, Report, Verdict,
    check_congruence_progression, check_convolution, check_empty_support,
    check_frobenius, check_identity, check_oracle_match, is_prime, run_checks,
)
from .corpus import (
    CorpusEntry, default_corpus_text, load_corpus, parse_corpus,
    run_corpus, run_entry,
)

__version__ = "0.1.0"

__all__ = [
    "Series", "expand_f", "pentagonal_numbers",
    "parse", "evaluate", "format_expr", "ExprAST",
    "IntLiteral", "QPower", "FAtom", "Neg", "Add", "Sub", "Mul", "Div",
    "Pow", "Extract", "Inflate", "ModRed",
    "OracleKind", "ADefinition", "OracleTable",
    "p_oracle", "overp_oracle", "a_oracle", "g_oracle", "oracle_by_name",
    "CheckKind", "Verdict", "IdentityCheck", "Report",
    "check_identity", "check_congruence_progression", "check_frobenius",
    "check_convolution", "check_empty_support", "check_oracle_match",
    "is_prime", "run_checks",
    "CorpusEntry", "parse_corpus", "load_corpus", "default_corpus_text",
    "run_entry", "run_corpus",
    "QetaError", "NotAUnitError", "OutOfRangeError", "NegativeValuationError",
    "NonExactDivisionError", "DomainError", "ExprSyntaxError", "NotPrimeError",
    "CorpusError",
    "__version__",
]
