"""Expression grammar for the command-line front end.

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' NAT)?
    atom   := NAT | GEN | BASIS | '(' expr ')'
    GEN    := 'c' NAT | "c'" NAT | 'v1' | 'v2'
    BASIS  := ('s' | 'q') '[' NAT (',' NAT)* ']'

Whitespace is insignificant.  There is no implicit multiplication and no
unary minus; subtraction is only binary.  Indices of s[...] must be weakly
decreasing, of q[...] strictly decreasing.  Errors carry the offending
position in the input.
"""

from __future__ import annotations

from dataclasses import dataclass

from .partitions import Partition, StrictPartition
from .polynomial import FAMILY_C, FAMILY_CPRIME, FAMILY_V1, FAMILY_V2, CPolynomial
from .qtilde import qtilde
from .schur import schur_dual_jt


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


# -- AST --------------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Gen:
    family: str
    index: int = 0


@dataclass(frozen=True)
class Basis:
    kind: str  # 's' or 'q'
    parts: tuple[int, ...]


@dataclass(frozen=True)
class Pow:
    base: "Expression"
    exponent: int


@dataclass(frozen=True)
class Prod:
    factors: tuple["Expression", ...]


@dataclass(frozen=True)
class Sum:
    first: "Expression"
    rest: tuple[tuple[str, "Expression"], ...]  # ('+' | '-', term)


Expression = Num | Gen | Basis | Pow | Prod | Sum


# -- parser -----------------------------------------------------------------


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str):
        raise ParseError(message, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take_nat(self) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error("expected a natural number")
        return int(self.text[start:self.pos])

    def parse(self) -> Expression:
        expr = self.parse_expr()
        self.skip_ws()
        if self.pos != len(self.text):
            self.error(f"unexpected {self.peek()!r}")
        return expr

    def parse_expr(self) -> Expression:
        first = self.parse_term()
        rest = []
        while True:
            self.skip_ws()
            if self.peek() in ("+", "-"):
                op = self.peek()
                self.pos += 1
                rest.append((op, self.parse_term()))
            else:
                break
        return Sum(first, tuple(rest)) if rest else first

    def parse_term(self) -> Expression:
        factors = [self.parse_factor()]
        while True:
            self.skip_ws()
            if self.peek() == "*":
                self.pos += 1
                factors.append(self.parse_factor())
            else:
                break
        return Prod(tuple(factors)) if len(factors) > 1 else factors[0]

    def parse_factor(self) -> Expression:
        atom = self.parse_atom()
        self.skip_ws()
        if self.peek() == "^":
            self.pos += 1
            self.skip_ws()
            exponent = self.take_nat()
            return Pow(atom, exponent)
        return atom

    def parse_atom(self) -> Expression:
        self.skip_ws()
        ch = self.peek()
        if ch == "":
            self.error("unexpected end of input")
        if ch.isdigit():
            return Num(self.take_nat())
        if ch == "(":
            self.pos += 1
            inner = self.parse_expr()
            self.skip_ws()
            if self.peek() != ")":
                self.error("expected ')'")
            self.pos += 1
            return inner
        if ch == "c":
            self.pos += 1
            family = FAMILY_C
            if self.peek() == "'":
                self.pos += 1
                family = FAMILY_CPRIME
            index = self.take_nat()
            if index < 1:
                self.error("generator index must be positive")
            return Gen(family, index)
        if ch == "v":
            self.pos += 1
            if self.peek() == "1":
                self.pos += 1
                return Gen(FAMILY_V1)
            if self.peek() == "2":
                self.pos += 1
                return Gen(FAMILY_V2)
            self.error("expected v1 or v2")
        if ch in ("s", "q"):
            kind = ch
            self.pos += 1
            self.skip_ws()
            if self.peek() != "[":
                self.error(f"expected '[' after {kind!r}")
            self.pos += 1
            parts = [self._basis_index()]
            while True:
                self.skip_ws()
                if self.peek() == ",":
                    self.pos += 1
                    parts.append(self._basis_index())
                elif self.peek() == "]":
                    self.pos += 1
                    break
                else:
                    self.error("expected ',' or ']'")
            for i in range(1, len(parts)):
                if kind == "s" and parts[i - 1] < parts[i]:
                    self.error(f"s-indices must be weakly decreasing: {parts}")
                if kind == "q" and parts[i - 1] <= parts[i]:
                    self.error(f"q-indices must be strictly decreasing: {parts}")
            return Basis(kind, tuple(parts))
        self.error(f"unexpected {ch!r}")

    def _basis_index(self) -> int:
        self.skip_ws()
        value = self.take_nat()
        if value < 1:
            self.error("basis indices must be positive")
        return value


def parse(text: str) -> Expression:
    """Parse an expression; raises ParseError with a position on bad input."""
    return _Parser(text).parse()


# -- printer ----------------------------------------------------------------


def to_text(expr: Expression) -> str:
    """Canonical text form; parsing it back yields an equal AST."""
    if isinstance(expr, Num):
        return str(expr.value)
    if isinstance(expr, Gen):
        if expr.family in (FAMILY_V1, FAMILY_V2):
            return expr.family
        return f"{expr.family}{expr.index}"
    if isinstance(expr, Basis):
        return f"{expr.kind}[{','.join(str(p) for p in expr.parts)}]"
    if isinstance(expr, Pow):
        base = to_text(expr.base)
        if isinstance(expr.base, (Sum, Prod, Pow)):
            base = f"({base})"
        return f"{base}^{expr.exponent}"
    if isinstance(expr, Prod):
        pieces = []
        for f in expr.factors:
            text = to_text(f)
            if isinstance(f, Sum):
                text = f"({text})"
            pieces.append(text)
        return "*".join(pieces)
    if isinstance(expr, Sum):
        out = to_text(expr.first)
        for op, term in expr.rest:
            out += f" {op} {to_text(term)}"
        return out
    raise TypeError(f"not an expression node: {expr!r}")


# -- evaluation -------------------------------------------------------------


def evaluate(expr: Expression) -> CPolynomial:
    """Evaluate an AST to a polynomial; basis atoms expand to their
    defining c-polynomials (s via the Schur determinant, q via Q-tilde)."""
    if isinstance(expr, Num):
        return CPolynomial.constant(expr.value)
    if isinstance(expr, Gen):
        return CPolynomial.gen(expr.family, expr.index)
    if isinstance(expr, Basis):
        if expr.kind == "s":
            return schur_dual_jt(Partition(expr.parts))
        return qtilde(Partition(expr.parts))
    if isinstance(expr, Pow):
        return evaluate(expr.base) ** expr.exponent
    if isinstance(expr, Prod):
        out = CPolynomial.one()
        for f in expr.factors:
            out = out * evaluate(f)
        return out
    if isinstance(expr, Sum):
        out = evaluate(expr.first)
        for op, term in expr.rest:
            value = evaluate(term)
            out = out + value if op == "+" else out - value
        return out
    raise TypeError(f"not an expression node: {expr!r}")


def evaluate_text(text: str) -> CPolynomial:
    return evaluate(parse(text))


# -- command-line partition arguments ----------------------------------------


def parse_partition_arg(text: str, strict: bool = False) -> Partition:
    """Partitions on the command line: comma-separated parts, e.g. '3,1'.

    '0', '[]' and the empty string all denote the empty partition.
    """
    cleaned = text.strip()
    if cleaned in ("", "0", "[]"):
        return StrictPartition() if strict else Partition()
    if cleaned.startswith("[") and cleaned.endswith("]"):
        cleaned = cleaned[1:-1]
    try:
        parts = [int(p) for p in cleaned.split(",")]
        return StrictPartition(parts) if strict else Partition(parts)
    except ValueError as exc:
        raise ValueError(f"bad partition argument {text!r}: {exc}") from exc
