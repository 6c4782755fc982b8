"""A small arithmetic expression language for problem definitions.

Grammar (see docs/expression-grammar.md): numbers, named variables,
unary minus, binary + - * / ^ with ^ right-associative, and the function
calls exp, ln, sin, cos, sqrt, pow, beta, abs. Parsing is a Pratt
(precedence-climbing) parser with positions preserved for error messages;
evaluation is strict IEEE double arithmetic that raises on domain
violations instead of returning NaN.
"""

import math
from dataclasses import dataclass

from .specfun import beta as _beta_fn


class ExprSyntaxError(ValueError):
    """Lexing or parsing failure; carries the source offset."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at offset {position})")
        self.position = position


class ExprEvalError(ValueError):
    """Evaluation failure: unbound variable or numeric domain violation."""


@dataclass(frozen=True)
class Num:
    value: float


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple


Expr = Num | Var | Neg | BinOp | Call

_OPERATORS = set("+-*/^")
_CONSTANTS = {"pi": math.pi, "e": math.e}
_MAX_DEPTH = 64

# binding powers; '^' handled right-associatively in the parser
_PRECEDENCE = {"+": 10, "-": 10, "*": 20, "/": 20, "^": 30}
_UNARY_PRECEDENCE = 25


@dataclass(frozen=True)
class Token:
    kind: str      # "num" | "ident" | "op" | "lparen" | "rparen" | "comma" | "end"
    text: str
    pos: int

    @property
    def value(self):
        return float(self.text)


def tokenize(source):
    """Split source into tokens; raises ExprSyntaxError on illegal characters."""
    if not source or source.isspace():
        raise ExprSyntaxError("empty expression", 0)
    tokens = []
    i, n = 0, len(source)
    while i < n:
        c = source[i]
        if c.isspace():
            i += 1
        elif c.isdigit() or (c == "." and i + 1 < n and source[i + 1].isdigit()):
            start = i
            while i < n and source[i].isdigit():
                i += 1
            if i < n and source[i] == ".":
                i += 1
                while i < n and source[i].isdigit():
                    i += 1
            if i < n and source[i] in "eE":
                j = i + 1
                if j < n and source[j] in "+-":
                    j += 1
                if j < n and source[j].isdigit():
                    i = j
                    while i < n and source[i].isdigit():
                        i += 1
            tokens.append(Token("num", source[start:i], start))
        elif c.isalpha() or c == "_":
            start = i
            while i < n and (source[i].isalnum() or source[i] == "_"):
                i += 1
            tokens.append(Token("ident", source[start:i], start))
        elif c in _OPERATORS:
            tokens.append(Token("op", c, i))
            i += 1
        elif c == "(":
            tokens.append(Token("lparen", c, i))
            i += 1
        elif c == ")":
            tokens.append(Token("rparen", c, i))
            i += 1
        elif c == ",":
            tokens.append(Token("comma", c, i))
            i += 1
        else:
            raise ExprSyntaxError(f"illegal character {c!r}", i)
    tokens.append(Token("end", "", n))
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.i = 0
        self.depth = 0

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind):
        tok = self.advance()
        if tok.kind != kind:
            raise ExprSyntaxError(f"expected {kind}, found {tok.text or 'end of input'!r}", tok.pos)
        return tok

    def parse_expression(self, min_bp=0):
        self.depth += 1
        if self.depth > _MAX_DEPTH:
            raise ExprSyntaxError("expression nested too deeply", self.peek().pos)
        try:
            left = self._prefix()
            while True:
                tok = self.peek()
                if tok.kind != "op" or tok.text not in _PRECEDENCE:
                    break
                bp = _PRECEDENCE[tok.text]
                if bp <= min_bp:
                    break
                self.advance()
                # right-associative power: allow equal precedence on the right
                right = self.parse_expression(bp - 1 if tok.text == "^" else bp)
                left = BinOp(tok.text, left, right)
            return left
        finally:
            self.depth -= 1

    def _prefix(self):
        tok = self.advance()
        if tok.kind == "num":
            return Num(tok.value)
        if tok.kind == "ident":
            if self.peek().kind == "lparen":
                self.advance()
                args = [self.parse_expression()]
                while self.peek().kind == "comma":
                    self.advance()
                    args.append(self.parse_expression())
                self.expect("rparen")
                return Call(tok.text, tuple(args))
            return Var(tok.text)
        if tok.kind == "lparen":
            inner = self.parse_expression()
            self.expect("rparen")
            return inner
        if tok.kind == "op" and tok.text == "-":
            return Neg(self.parse_expression(_UNARY_PRECEDENCE))
        if tok.kind == "op" and tok.text == "+":
            return self.parse_expression(_UNARY_PRECEDENCE)
        raise ExprSyntaxError(f"unexpected {tok.text or 'end of input'!r}", tok.pos)


def parse(source_or_tokens):
    """Parse a source string (or token list) into an Expr."""
    tokens = tokenize(source_or_tokens) if isinstance(source_or_tokens, str) else source_or_tokens
    parser = _Parser(tokens)
    expr = parser.parse_expression()
    trailing = parser.peek()
    if trailing.kind != "end":
        raise ExprSyntaxError(f"unexpected {trailing.text!r} after expression", trailing.pos)
    return expr


def _checked(name, value):
    if not math.isfinite(value):
        raise ExprEvalError(f"{name} produced a non-finite result")
    return value


def _fn_ln(x):
    if x <= 0.0:
        raise ExprEvalError(f"ln of non-positive value {x}")
    return math.log(x)


def _fn_sqrt(x):
    if x < 0.0:
        raise ExprEvalError(f"sqrt of negative value {x}")
    return math.sqrt(x)


def _power(base, exponent):
    if base < 0.0 and exponent != round(exponent):
        raise ExprEvalError(f"negative base {base} with non-integer exponent {exponent}")
    if base == 0.0 and exponent < 0.0:
        raise ExprEvalError("zero raised to a negative power")
    return _checked("^", math.pow(base, exponent))


def _fn_beta(a, b):
    if a <= 0.0 or b <= 0.0:
        raise ExprEvalError(f"beta requires positive arguments, got ({a}, {b})")
    return _beta_fn(a, b)


_FUNCTIONS = {
    "exp": (1, lambda x: _checked("exp", math.exp(x) if x < 709.0 else math.inf)),
    "ln": (1, _fn_ln),
    "sin": (1, math.sin),
    "cos": (1, math.cos),
    "sqrt": (1, _fn_sqrt),
    "abs": (1, abs),
    "pow": (2, _power),
    "beta": (2, _fn_beta),
}


def evaluate(expr, bindings=None):
    """Evaluate an Expr with the given variable bindings (pi and e built in)."""
    env = dict(_CONSTANTS)
    if bindings:
        env.update(bindings)
    return _eval(expr, env)


def _eval(expr, env):
    if isinstance(expr, Num):
        return expr.value
    if isinstance(expr, Var):
        try:
            return float(env[expr.name])
        except KeyError:
            raise ExprEvalError(f"unbound variable {expr.name!r}") from None
    if isinstance(expr, Neg):
        return -_eval(expr.operand, env)
    if isinstance(expr, BinOp):
        a = _eval(expr.left, env)
        b = _eval(expr.right, env)
        if expr.op == "+":
            return _checked("+", a + b)
        if expr.op == "-":
            return _checked("-", a - b)
        if expr.op == "*":
            return _checked("*", a * b)
        if expr.op == "/":
            if b == 0.0:
                raise ExprEvalError("division by zero")
            return _checked("/", a / b)
        return _power(a, b)
    if isinstance(expr, Call):
        try:
            arity, fn = _FUNCTIONS[expr.name]
        except KeyError:
            raise ExprEvalError(f"unknown function {expr.name!r}") from None
        if len(expr.args) != arity:
            raise ExprEvalError(f"{expr.name} takes {arity} argument(s), got {len(expr.args)}")
        return fn(*(_eval(a, env) for a in expr.args))
    raise TypeError(f"not an expression node: {expr!r}")


def to_source(expr):
    """Render an Expr as parseable text; parse(to_source(e)) == e."""
    return _print(expr, 0)


def _print(expr, parent_bp):
    if isinstance(expr, Num):
        return repr(expr.value)
    if isinstance(expr, Var):
        return expr.name
    if isinstance(expr, Call):
        return f"{expr.name}({', '.join(_print(a, 0) for a in expr.args)})"
    if isinstance(expr, Neg):
        text = "-" + _print(expr.operand, _UNARY_PRECEDENCE)
        return f"({text})" if parent_bp > _UNARY_PRECEDENCE else text
    if isinstance(expr, BinOp):
        bp = _PRECEDENCE[expr.op]
        if expr.op == "^":
            left = _print(expr.left, bp)       # ^ is right-associative
            right = _print(expr.right, bp - 1)
        else:
            left = _print(expr.left, bp - 1)   # left-associative
            right = _print(expr.right, bp)
        text = f"{left} {expr.op} {right}" if expr.op in "+-" else f"{left}{expr.op}{right}"
        return f"({text})" if parent_bp >= bp else text
    raise TypeError(f"not an expression node: {expr!r}")


def compile_function(source, variables):
    """Parse once and return a python function of the named variables.

    Extra keyword bindings (problem constants) may be supplied at call
    construction via functools-style closure: compile_function returns
    f(*values, **extra).
    """
    expr = parse(source)
    names = tuple(variables)

    def fn(*values, **extra):
        if len(values) != len(names):
            raise TypeError(f"expected {len(names)} positional values for {names}")
        env = dict(zip(names, (float(v) for v in values)))
        env.update(extra)
        return evaluate(expr, env)

    return fn
