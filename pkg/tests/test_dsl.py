"""Expression language: parsing, formatting, evaluation."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from enumeration import count_a_mod6, count_overpartitions
from qeta.dsl import (
    Add, Div, Extract, FAtom, Inflate, IntLiteral, ModRed, Mul, Neg, Pow,
    QPower, Sub, evaluate, format_expr, parse,
)
from qeta.errors import (
    DomainError,
    ExprSyntaxError,
    NegativeValuationError,
    NonExactDivisionError,
    NotAUnitError,
)
from qeta.series import Series


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

class TestParse:
    def test_a_series_quotient(self):
        assert parse("f3/(f1*f6)") == Div(FAtom(3), Mul(FAtom(1), FAtom(6)))

    def test_simplified_identity_rhs(self):
        ast = parse("2*f2*f6^2*f8^2/(f1^4*f3*f12)")
        assert isinstance(ast, Div)
        assert ast.left == Mul(Mul(Mul(IntLiteral(2), FAtom(2)), Pow(FAtom(6), 2)), Pow(FAtom(8), 2))
        assert ast.right == Mul(Mul(Pow(FAtom(1), 4), FAtom(3)), FAtom(12))

    def test_extract_bad_residue_is_domain_error(self):
        with pytest.raises(DomainError):
            parse("extract(f3/(f1*f6), 4, 5)")

    def test_implicit_multiplication(self):
        assert parse("2q^3 f6^2") == parse("2*q^3*f6^2")
        assert parse("4q^3f6") == parse("4*q^3*f6")
        assert parse("2(1+q)") == parse("2*(1+q)")

    def test_implicit_only_after_int_or_q_power(self):
        # an f-atom does not start an implicit product
        with pytest.raises(ExprSyntaxError):
            parse("f2 f3")

    def test_whitespace_insensitive(self):
        assert parse(" f3 / ( f1 * f6 ) ") == parse("f3/(f1*f6)")

    def test_precedence(self):
        assert parse("1+2*f3") == Add(IntLiteral(1), Mul(IntLiteral(2), FAtom(3)))
        assert parse("f1^2*f2") == Mul(Pow(FAtom(1), 2), FAtom(2))
        assert parse("f1-f2-f3") == Sub(Sub(FAtom(1), FAtom(2)), FAtom(3))

    def test_q_powers(self):
        assert parse("q") == QPower(1)
        assert parse("q^0") == QPower(0)
        assert parse("q^7") == QPower(7)

    def test_negative_exponent(self):
        assert parse("f3^-2") == Pow(FAtom(3), -2)

    def test_leading_minus(self):
        assert parse("-5") == IntLiteral(-5)
        assert parse("-f3") == Neg(FAtom(3))
        assert parse("-2*q") == Neg(Mul(IntLiteral(2), QPower(1)))

    def test_functions(self):
        assert parse("extract(f1, 4, 2)") == Extract(FAtom(1), 4, 2)
        assert parse("inflate(f1, 3)") == Inflate(FAtom(1), 3)
        assert parse("mod(f1, 2)") == ModRed(FAtom(1), 2)

    def test_syntax_error_offset(self):
        with pytest.raises(ExprSyntaxError) as info:
            parse("f3/(f1*f6")
        assert info.value.offset == 9
        assert "')'" in str(info.value)

    def test_unknown_identifier(self):
        with pytest.raises(ExprSyntaxError) as info:
            parse("foo(f1, 2)")
        assert info.value.offset == 0

    def test_f_without_subscript(self):
        with pytest.raises(ExprSyntaxError):
            parse("f + 1")

    def test_f0_rejected(self):
        with pytest.raises(DomainError):
            parse("f0")

    def test_trailing_garbage(self):
        with pytest.raises(ExprSyntaxError) as info:
            parse("f1 )")
        assert info.value.offset == 3

    def test_exponent_sanity_bound(self):
        parse("f1^64")
        parse("f1^-64")
        with pytest.raises(DomainError):
            parse("f1^65")
        with pytest.raises(DomainError):
            parse("f1^-65")

    def test_mod_requires_modulus_at_least_two(self):
        with pytest.raises(DomainError):
            parse("mod(f1, 1)")

    def test_inflate_requires_positive_step(self):
        with pytest.raises(DomainError):
            parse("inflate(f1, 0)")

    def test_empty_input(self):
        with pytest.raises(ExprSyntaxError):
            parse("")


# ---------------------------------------------------------------------------
# formatting
# ---------------------------------------------------------------------------

class TestFormat:
    def test_round_trip_a_series(self):
        ast = parse("f3/(f1*f6)")
        assert parse(format_expr(ast)) == ast

    def test_round_trip_five_term_rhs(self):
        text = ("2*f3*f4^3*f6^2*f24/(f1^2*f2^3*f8*f12^2)"
                " + 4*q*f6^5*f24^2/(f1^3*f2^2*f12^3)"
                " - 2*q^2*f3*f4^3*f24^4/(f1^2*f2^2*f6*f8^2*f12^2)"
                " + 4*q^3*f6^2*f24^5/(f1^3*f2*f8*f12^3)"
                " - 8*q^5*f24^8/(f1^3*f6*f8^2*f12^3)")
        ast = parse(text)
        assert parse(format_expr(ast)) == ast

    def test_zero_literal(self):
        assert format_expr(IntLiteral(0)) == "0"

    def test_structure_preserving_parens(self):
        cases = [
            Sub(FAtom(1), Sub(FAtom(2), FAtom(3))),
            Mul(FAtom(1), Mul(FAtom(2), FAtom(3))),
            Div(FAtom(1), Mul(FAtom(2), FAtom(3))),
            Div(Div(FAtom(1), FAtom(2)), FAtom(3)),
            Pow(Add(IntLiteral(1), QPower(1)), 2),
            Pow(QPower(3), 2),
            Neg(Add(FAtom(1), FAtom(2))),
            Mul(IntLiteral(-2), FAtom(3)),
            Extract(Div(FAtom(3), Mul(FAtom(1), FAtom(6))), 4, 2),
        ]
        for ast in cases:
            assert parse(format_expr(ast)) == ast, format_expr(ast)


# random well-formed ASTs (canonical shapes: no Neg directly on a literal)
_leaves = st.one_of(
    st.integers(-30, 30).map(IntLiteral),
    st.integers(0, 8).map(QPower),
    st.integers(1, 48).map(FAtom),
)


def _branches(children):
    pair = st.tuples(children, children)
    return st.one_of(
        pair.map(lambda ab: Add(*ab)),
        pair.map(lambda ab: Sub(*ab)),
        pair.map(lambda ab: Mul(*ab)),
        pair.map(lambda ab: Div(*ab)),
        st.tuples(children.filter(lambda x: not isinstance(x, IntLiteral))).map(
            lambda t: Neg(t[0])
        ),
        st.tuples(children, st.integers(-8, 8)).map(lambda t: Pow(*t)),
        st.tuples(children, st.integers(1, 6), st.integers(0, 5)).map(
            lambda t: Extract(t[0], t[1], min(t[2], t[1] - 1))
        ),
        st.tuples(children, st.integers(1, 6)).map(lambda t: Inflate(*t)),
        st.tuples(children, st.integers(2, 9)).map(lambda t: ModRed(*t)),
    )


ast_strategy = st.recursive(_leaves, _branches, max_leaves=12)


@settings(max_examples=150, deadline=None)
@given(ast_strategy)
def test_parse_format_round_trip_random(ast):
    assert parse(format_expr(ast)) == ast


# ---------------------------------------------------------------------------
# evaluation
# ---------------------------------------------------------------------------

class TestEvaluate:
    def test_a_series_values(self):
        series = evaluate("f3/(f1*f6)", 4)
        assert list(series.coeffs) == [count_a_mod6(n) for n in range(5)]

    def test_theta_series_values(self):
        series = evaluate("f2^2*f3*f12/(f1*f4*f6)", 8)
        assert list(series.coeffs) == [1, 1, 0, 0, 0, 1, 0, 0, 1]

    def test_one_over_q_negative_valuation(self):
        with pytest.raises(NegativeValuationError):
            evaluate("1/q", 10)

    def test_valuation_shifted_division(self):
        # q^2/q is fine and drops the order by the denominator valuation
        series = evaluate("q^2/q", 10)
        assert series.order == 9
        assert series == Series([0, 1], order=9)

    def test_exact_integer_division(self):
        assert evaluate("(2+2*q)/2", 5) == Series([1, 1], order=5)

    def test_non_exact_division(self):
        with pytest.raises(NonExactDivisionError):
            evaluate("(1+q)/2", 5)

    def test_division_by_zero_series(self):
        with pytest.raises(NonExactDivisionError):
            evaluate("f1/0", 5)

    def test_negative_power_of_non_unit(self):
        with pytest.raises(NotAUnitError):
            evaluate("q^-2", 5)
        with pytest.raises(NotAUnitError):
            evaluate("(2+q)^-1", 5)

    def test_overpartition_series(self):
        series = evaluate("f2/f1^2", 30)
        assert list(series.coeffs) == [count_overpartitions(k) for k in range(31)]

    def test_extract_auto_expands(self):
        # extracting to order N requires the base at order m*N + j
        direct = evaluate("f3/(f1*f6)", 41)
        extracted = evaluate("extract(f3/(f1*f6), 4, 1)", 10)
        assert extracted.order == 10
        assert list(extracted.coeffs) == [direct.coeff(4 * n + 1) for n in range(11)]

    def test_inflate_truncates_to_requested_order(self):
        series = evaluate("inflate(f1, 3)", 10)
        assert series.order == 10

    def test_mod_node(self):
        assert evaluate("mod(f1, 2)", 7) == evaluate("f1", 7).reduce_mod(2)

    def test_negative_int_literal(self):
        assert evaluate("-3", 2) == Series([-3], order=2)

    def test_inflate_over_shrunken_division(self):
        # the division lowers the child's order; the inflated series comes
        # back honestly shorter instead of raising or padding
        series = evaluate("inflate(q^2*f1/q, 3)", 10)
        assert series.order == 9
        assert series == evaluate("q*f1", 3).inflate(3)

    def test_extract_over_shrunken_division(self):
        series = evaluate("extract(q^2*f1/q, 2, 0)", 10)
        assert series.order == 9
        direct = evaluate("q*f1", 19)
        assert list(series.coeffs) == [direct.coeff(2 * n) for n in range(10)]


# error-free AST subset for the homomorphism property
_safe_leaves = st.one_of(
    st.integers(-9, 9).map(IntLiteral),
    st.integers(0, 5).map(QPower),
    st.integers(1, 12).map(FAtom),
)


def _safe_branches(children):
    pair = st.tuples(children, children)
    return st.one_of(
        pair.map(lambda ab: Add(*ab)),
        pair.map(lambda ab: Sub(*ab)),
        pair.map(lambda ab: Mul(*ab)),
        st.tuples(children.filter(lambda x: not isinstance(x, IntLiteral))).map(
            lambda t: Neg(t[0])
        ),
        st.tuples(children, st.integers(0, 4)).map(lambda t: Pow(*t)),
        st.tuples(children, st.integers(1, 4)).map(lambda t: Inflate(*t)),
        st.tuples(children, st.integers(2, 7)).map(lambda t: ModRed(*t)),
    )


safe_ast = st.recursive(_safe_leaves, _safe_branches, max_leaves=6)


@settings(max_examples=120, deadline=None)
@given(safe_ast, safe_ast, st.integers(0, 25))
def test_evaluate_is_multiplicative(a, b, order):
    assert evaluate(Mul(a, b), order) == evaluate(a, order) * evaluate(b, order)


@settings(max_examples=120, deadline=None)
@given(safe_ast, safe_ast, st.integers(0, 25))
def test_evaluate_is_additive(a, b, order):
    assert evaluate(Add(a, b), order) == evaluate(a, order) + evaluate(b, order)
