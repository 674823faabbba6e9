"""Command-line front end: certified decimal evaluation and law suites.

Usage:
    streaks eval "<expr>" --digits N [--budget B]
    streaks check <names...> [--trials T] [--seed S]

`eval` prints the decimal result followed by a one-line certificate
recording the final interval; identical inputs always produce
identical bytes.  `check` runs the randomized law suites on registered
streaks.  Exit codes: 0 success, 1 evaluation/budget error, 2 usage
error.
"""

from __future__ import annotations

import argparse
import sys

from .cauchy import CauchyReal, cs_limit, cs_to_real
from .core import BudgetExceeded, Sampler, axiom_suite
from .rational import DivisionByZero, Rational, parse_rational
from .real import (
    ApartnessUndecided,
    derive_apartness,
    real_abs,
    real_add,
    real_from_rational,
    real_inf,
    real_mul_total,
    real_neg,
    real_recip,
    real_sub,
    real_sup,
    real_to_decimal,
)
from .registry import UnknownStreak, get_streak


class ExprSyntaxError(SyntaxError):
    def __init__(self, message, position):
        super().__init__("%s (at offset %d)" % (message, position))
        self.position = position


class UnknownConstant(Exception):
    pass


# -- AST -------------------------------------------------------------------


class Expr:
    pass


class Lit(Expr):
    def __init__(self, value):
        self.value = Rational(value)

    def __eq__(self, other):
        return isinstance(other, Lit) and self.value == other.value

    def __repr__(self):
        return "Lit(%s)" % self.value


class Const(Expr):
    def __init__(self, name):
        self.name = name

    def __eq__(self, other):
        return isinstance(other, Const) and self.name == other.name

    def __repr__(self):
        return "Const(%s)" % self.name


class Lim(Expr):
    def __init__(self, name):
        self.name = name

    def __eq__(self, other):
        return isinstance(other, Lim) and self.name == other.name

    def __repr__(self):
        return "Lim(%s)" % self.name


class Unary(Expr):
    def __init__(self, op, operand):
        self.op = op  # neg | abs | recip
        self.operand = operand

    def __eq__(self, other):
        return (
            isinstance(other, Unary)
            and self.op == other.op
            and self.operand == other.operand
        )

    def __repr__(self):
        return "Unary(%s, %r)" % (self.op, self.operand)


class Binary(Expr):
    def __init__(self, op, left, right):
        self.op = op  # add | sub | mul | div | min | max
        self.left = left
        self.right = right

    def __eq__(self, other):
        return (
            isinstance(other, Binary)
            and self.op == other.op
            and self.left == other.left
            and self.right == other.right
        )

    def __repr__(self):
        return "Binary(%s, %r, %r)" % (self.op, self.left, self.right)


# -- built-in constants (demo plumbing, not claimed results) ---------------


def _geometric_family(i):
    # partial sums of 1 + 1/2 + 1/4 + ...; member i is the constant
    # sequence at the i-th partial sum
    total = Rational(2) - Rational(1, 2**i)
    return CauchyReal.constant(total)


def _geometric_real():
    partial = CauchyReal(
        lambda i: Rational(2) - Rational(1, 2**i),
        lambda n: max(n.bit_length(), 1),
        monotone=True,
    )
    return cs_to_real(partial)


CONSTANTS = {
    "geom2": _geometric_real,  # the geometric series summing to 2
}

FAMILIES = {
    # partial sums are within 1/n of each other past index bit_length(n)+1
    "geom": (_geometric_family, lambda n: max(n.bit_length() + 1, 1)),
}


# -- tokenizer / parser ----------------------------------------------------


class _Token:
    def __init__(self, kind, text, pos):
        self.kind = kind
        self.text = text
        self.pos = pos


def _tokenize(text):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            if j < len(text) and text[j] == ".":
                j += 1
                if j >= len(text) or not text[j].isdigit():
                    raise ExprSyntaxError("malformed decimal literal", i)
                while j < len(text) and text[j].isdigit():
                    j += 1
            tokens.append(_Token("number", text[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(_Token("name", text[i:j], i))
            i = j
            continue
        if ch in "+-*/(),":
            tokens.append(_Token(ch, ch, i))
            i += 1
            continue
        raise ExprSyntaxError("unexpected character %r" % ch, i)
    tokens.append(_Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind):
        tok = self.next()
        if tok.kind != kind:
            raise ExprSyntaxError("expected %r" % kind, tok.pos)
        return tok

    def parse(self):
        expr = self.additive()
        tail = self.peek()
        if tail.kind != "end":
            raise ExprSyntaxError("unexpected trailing input", tail.pos)
        return expr

    def additive(self):
        node = self.multiplicative()
        while self.peek().kind in ("+", "-"):
            op = self.next().kind
            rhs = self.multiplicative()
            node = Binary("add" if op == "+" else "sub", node, rhs)
        return node

    def multiplicative(self):
        node = self.unary()
        while self.peek().kind in ("*", "/"):
            op = self.next().kind
            rhs = self.unary()
            node = Binary("mul" if op == "*" else "div", node, rhs)
        return node

    def unary(self):
        if self.peek().kind == "-":
            tok = self.next()
            return Unary("neg", self.unary())
        return self.primary()

    def primary(self):
        tok = self.next()
        if tok.kind == "number":
            # an integer literal directly followed by /integer is a
            # rational literal, read exactly
            if (
                "." not in tok.text
                and self.peek().kind == "/"
                and self.tokens[self.pos + 1].kind == "number"
                and "." not in self.tokens[self.pos + 1].text
            ):
                self.next()
                den = self.next()
                return Lit(parse_rational("%s/%s" % (tok.text, den.text)))
            return Lit(parse_rational(tok.text))
        if tok.kind == "(":
            node = self.additive()
            self.expect(")")
            return node
        if tok.kind == "name":
            name = tok.text
            if self.peek().kind == "(":
                self.next()
                if name in ("abs", "recip"):
                    arg = self.additive()
                    self.expect(")")
                    return Unary(name, arg)
                if name in ("min", "max"):
                    left = self.additive()
                    self.expect(",")
                    right = self.additive()
                    self.expect(")")
                    return Binary(name, left, right)
                if name == "lim":
                    inner = self.expect("name")
                    self.expect(")")
                    return Lim(inner.text)
                raise ExprSyntaxError("unknown function %r" % name, tok.pos)
            return Const(name)
        raise ExprSyntaxError("expected an expression", tok.pos)


def parse_expr(text):
    """Parse an arithmetic expression into an AST (exact literals,
    precedence unary > mul/div > add/sub)."""
    return _Parser(_tokenize(text)).parse()


def format_expr(e):
    """Render an AST back to parseable text (round-trips structurally)."""
    if isinstance(e, Lit):
        return "(%s)" % e.value if e.value < Rational(0) else str(e.value)
    if isinstance(e, Const):
        return e.name
    if isinstance(e, Lim):
        return "lim(%s)" % e.name
    if isinstance(e, Unary):
        if e.op == "neg":
            return "-(%s)" % format_expr(e.operand)
        return "%s(%s)" % (e.op, format_expr(e.operand))
    symbols = {"add": "+", "sub": "-", "mul": "*", "div": "/"}
    if e.op in symbols:
        return "((%s) %s (%s))" % (format_expr(e.left), symbols[e.op], format_expr(e.right))
    return "%s(%s, %s)" % (e.op, format_expr(e.left), format_expr(e.right))


# -- evaluation ------------------------------------------------------------


class EvalConfig:
    def __init__(self, digits, budget=10**7, seed=0):
        self.digits = int(digits)
        self.budget = max(int(budget), 1)
        self.seed = int(seed)
        if self.digits < 0:
            raise ValueError("digits must be non-negative")


def _to_real(e, cfg):
    if isinstance(e, Lit):
        return real_from_rational(e.value)
    if isinstance(e, Const):
        if e.name not in CONSTANTS:
            raise UnknownConstant(e.name)
        return CONSTANTS[e.name]()
    if isinstance(e, Lim):
        if e.name not in FAMILIES:
            raise UnknownConstant(e.name)
        family, outer = FAMILIES[e.name]
        return cs_to_real(cs_limit(family, outer))
    if isinstance(e, Unary):
        inner = _to_real(e.operand, cfg)
        if e.op == "neg":
            return real_neg(inner)
        if e.op == "abs":
            return real_abs(inner)
        cert = derive_apartness(inner, cfg.budget)
        return real_recip(inner, cert)
    left = _to_real(e.left, cfg)
    right = _to_real(e.right, cfg)
    if e.op == "add":
        return real_add(left, right)
    if e.op == "sub":
        return real_sub(left, right)
    if e.op == "mul":
        return real_mul_total(left, right, cfg.budget)
    if e.op == "div":
        cert = derive_apartness(right, cfg.budget)
        return real_mul_total(left, real_recip(right, cert), cfg.budget)
    if e.op == "min":
        return real_inf(left, right)
    return real_sup(left, right)


def eval_expr(e, cfg):
    """Evaluate an AST into a certified decimal string."""
    value = _to_real(e, cfg)
    return real_to_decimal(value, cfg.digits, cfg.budget)


def check_streaks(names, trials, seed):
    """Run the law suite on each named streak; returns (exit code, text)."""
    lines = []
    all_pass = True
    for name in names:
        handle = get_streak(name)
        report = axiom_suite(handle, Sampler(seed), trials)
        lines.append(report.summary())
        all_pass = all_pass and report.passed
    return (0 if all_pass else 1), "\n".join(lines)


# -- entry point -----------------------------------------------------------


def _build_argparser():
    parser = argparse.ArgumentParser(prog="streaks", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate an expression to a certified decimal")
    p_eval.add_argument("expr")
    p_eval.add_argument("--digits", type=int, required=True)
    p_eval.add_argument("--budget", type=int, default=10**7)

    p_check = sub.add_parser("check", help="run law suites on registered streaks")
    p_check.add_argument("names", nargs="+")
    p_check.add_argument("--trials", type=int, default=500)
    p_check.add_argument("--seed", type=int, default=0)
    return parser


def main(argv=None):
    parser = _build_argparser()
    args = parser.parse_args(argv)
    if args.command == "eval":
        try:
            ast = parse_expr(args.expr)
        except ExprSyntaxError as exc:
            print("syntax error: %s" % exc, file=sys.stderr)
            return 2
        except DivisionByZero as exc:
            print("error: %s" % exc, file=sys.stderr)
            return 1
        try:
            text, cert = eval_expr(ast, EvalConfig(args.digits, args.budget))
        except (BudgetExceeded, ApartnessUndecided, DivisionByZero) as exc:
            print("error: %s: %s" % (type(exc).__name__, exc), file=sys.stderr)
            return 1
        except UnknownConstant as exc:
            print("unknown constant: %s" % exc, file=sys.stderr)
            return 2
        print(text)
        print(cert.line())
        return 0
    try:
        code, text = check_streaks(args.names, args.trials, args.seed)
    except UnknownStreak as exc:
        print("unknown streak: %s" % exc, file=sys.stderr)
        return 2
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
