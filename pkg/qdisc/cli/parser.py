"""
Expressions over the generators z and zs (for z*), the scalars q and s and rational literals.

Products are kept in written order; the noncommutative relation is applied by to_ncpoly, never by the parser.
"""

from dataclasses import dataclass, field
from typing import Union

import ply.lex as lex
import ply.yacc as yacc

import qdisc.conf

from qdisc.algebra.qpoly import NCPoly, ZS, Z, nc_mul
from qdisc.algebra.scalar import ONE, q, s, to_qscalar
from qdisc.errors import ExpressionError


@dataclass(frozen=True)
class Number:
    value: int


@dataclass(frozen=True)
class Symbol:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: 'Expr'


@dataclass(frozen=True)
class BinOp:
    op: str
    left: 'Expr'
    right: 'Expr'
    position: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Power:
    base: 'Expr'
    exponent: int
    position: int = field(default=0, compare=False)


Expr = Union[Number, Symbol, Neg, BinOp, Power]

SYMBOLS = (Z, ZS, 'q', 's')


# Tokens

tokens = (
    'NAME', 'INTEGER',
    'PLUS', 'MINUS', 'TIMES', 'DIVIDE', 'CARET',
    'LPAREN', 'RPAREN',
)

t_PLUS = r'\+'
t_MINUS = r'-'
t_TIMES = r'\*'
t_DIVIDE = r'/'
t_CARET = r'\^'
t_LPAREN = r'\('
t_RPAREN = r'\)'

t_ignore = ' \t\n'


def t_NAME(t):
    r'[a-zA-Z_][a-zA-Z_0-9]*'
    if t.value not in SYMBOLS:
        raise ExpressionError('unknown symbol {0!r} at position {1}'.format(t.value, t.lexpos),
                              position=t.lexpos, code='unknown-symbol')
    return t


def t_INTEGER(t):
    r'\d+'
    t.value = int(t.value)
    return t


def t_error(t):
    raise ExpressionError('illegal character {0!r} at position {1}'.format(t.value[0], t.lexpos), position=t.lexpos)


# Parsing rules

precedence = (
    ('left', 'PLUS', 'MINUS'),
    ('left', 'TIMES', 'DIVIDE'),
    ('right', 'UMINUS'),
    ('right', 'CARET'),
)


def p_expression_binop(p):
    '''expression : expression PLUS expression
                  | expression MINUS expression
                  | expression TIMES expression
                  | expression DIVIDE expression'''
    p[0] = BinOp(p[2], p[1], p[3], p.lexpos(2))


def p_expression_power(p):
    'expression : expression CARET INTEGER'
    p[0] = Power(p[1], p[3], p.lexpos(2))


def p_expression_negative_power(p):
    'expression : expression CARET MINUS INTEGER'
    raise ExpressionError('negative exponent -{0} at position {1}'.format(p[4], p.lexpos(3)),
                          position=p.lexpos(3), code='negative-exponent')


def p_expression_uminus(p):
    'expression : MINUS expression %prec UMINUS'
    p[0] = Neg(p[2])


def p_expression_group(p):
    'expression : LPAREN expression RPAREN'
    p[0] = p[2]


def p_expression_integer(p):
    'expression : INTEGER'
    p[0] = Number(p[1])


def p_expression_name(p):
    'expression : NAME'
    p[0] = Symbol(p[1])


def p_error(p):
    if p is None:
        raise ExpressionError('unexpected end of input', position=-1)
    raise ExpressionError('syntax error at {0!r}, position {1}'.format(p.value, p.lexpos), position=p.lexpos)


_lexer = lex.lex()
_parser = yacc.yacc(debug=False, write_tables=False, errorlog=yacc.NullLogger())


def parse(text: str) -> Expr:
    if not text.strip():
        raise ExpressionError('empty expression', position=0)

    try:
        return _parser.parse(text, lexer=_lexer.clone())
    except ExpressionError as e:
        if e.position == -1:
            e.position = len(text)
            e.details['position'] = len(text)
        raise


def _scalar_of(f: NCPoly):
    return f.coefficient(0, 0)


def to_ncpoly(expr: Expr) -> NCPoly:
    """Evaluates an expression in the algebra, multiplying left to right"""
    if isinstance(expr, Number):
        return NCPoly.scalar(to_qscalar(expr.value))

    if isinstance(expr, Symbol):
        if expr.name == Z:
            return NCPoly.z()
        elif expr.name == ZS:
            return NCPoly.zs()
        return NCPoly.scalar(q if expr.name == 'q' else s)

    if isinstance(expr, Neg):
        return -to_ncpoly(expr.operand)

    if isinstance(expr, Power):
        if expr.exponent > qdisc.conf.MAX_EXPONENT:
            raise ExpressionError('exponent {0} at position {1} is above the limit {2}'.format(
                expr.exponent, expr.position, qdisc.conf.MAX_EXPONENT),
                position=expr.position, code='exponent-too-large')

        base = to_ncpoly(expr.base)
        result = NCPoly.one()
        for _ in range(expr.exponent):
            result = nc_mul(result, base)
        return result

    left, right = to_ncpoly(expr.left), to_ncpoly(expr.right)
    if expr.op == '+':
        return left + right
    elif expr.op == '-':
        return left - right
    elif expr.op == '*':
        return nc_mul(left, right)

    # Only scalars can be divided by
    if not right.is_scalar():
        raise ExpressionError('the divisor at position {0} is not a scalar'.format(expr.position),
                              position=expr.position, code='non-scalar-divisor')
    if not right:
        raise ExpressionError('division by zero at position {0}'.format(expr.position),
                              position=expr.position, code='division-by-zero')

    return left.scale(ONE / _scalar_of(right))


def parse_ncpoly(text: str) -> NCPoly:
    return to_ncpoly(parse(text))


def parse_scalar(text: str):
    f = parse_ncpoly(text)
    if not f.is_scalar():
        raise ExpressionError('{0!r} is not a scalar'.format(text), position=0, code='not-a-scalar')
    return _scalar_of(f)


def format_expr(expr: Expr) -> str:
    """Fully parenthesised text of an expression tree; parsing it gives the same tree back"""
    if isinstance(expr, Number):
        return str(expr.value)
    if isinstance(expr, Symbol):
        return expr.name
    if isinstance(expr, Neg):
        return '(-{0})'.format(format_expr(expr.operand))
    if isinstance(expr, Power):
        return '({0})^{1}'.format(format_expr(expr.base), expr.exponent)

    return '({0} {1} {2})'.format(format_expr(expr.left), expr.op, format_expr(expr.right))

