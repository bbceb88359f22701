"""Symbolic-computation kernel for natural-number arithmetic.

The package combines a universal syntax type with quotation and typed
evaluation, binary-numeral arithmetic transformers checked against
their meaning formulas, language recognizers, induction-schema
instantiation, quantifier-elimination decision procedures for the
successor and successor-plus-addition languages, and a graph of
theories whose morphism obligations are discharged mechanically.
"""

from .binum import (
    BinDigit, BinNum, binnum, bplus, bplus_rewrite, btimes,
    from_construction, is_bnum, normalize, of_nat, shift, succ_b,
    to_construction, to_nat,
)
from .errors import (
    BiforgeError, LanguageError, NotAnAbstraction, NotBnum, ParseError,
    QuantifierEncountered, SortError, StuckRewrite,
)
from .presburger import (
    Divides, Elimination, EqZero, LinearTerm, LtZero, TruthValue,
    bounded_oracle, cooper_eliminate, decide_bt5, decide_bt6,
    decide_bt6_with_bound, eliminate_quantifiers, linearize,
)
from .recognizers import LangLevel, is_fo, is_fo_abs
from .semantics import (
    Bounded, Environment, QUANTIFIER_FREE, QuantifierFree, eval_bool,
    eval_nat, override, parse_environment,
)
from .sexpr import binnum_literal, parse_binnum, parse_construction, to_sexpr
from .syntax import (
    Abs, And, Construction, Eq, Exists, FF, Forall, Implies, Not, Or,
    Plus, Sort, Succ, TT, Times, Var, Zero, abs_body, alpha_equal, bnat,
    free_vars, is_abs, is_closed, quote_unary, sort_of, substitute,
)
from .theory import (
    AXIOMS, BiformTheory, DecideL2, Morphism, Obligation,
    RandomizedModelCheck, Report, SchemaKind, Transformer,
    builtin_morphisms, check_axioms, check_definite_description,
    check_morphism, induction_instance, morphism, parse_theory_graph,
    registry, render_theory_graph, theory, translate,
)

__all__ = [name for name in dir() if not name.startswith("_")]
