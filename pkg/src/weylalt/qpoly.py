"""Exact integer polynomials in one variable ``q``."""

from __future__ import annotations

import re
from typing import Iterable, Sequence


class QPoly:
    """Polynomial with integer coefficients, ``coeffs[k]`` multiplying ``q**k``.

    Trailing zeros are trimmed, so the zero polynomial has no coefficients.
    Instances are immutable and hashable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("QPoly is immutable")

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "QPoly":
        return cls([0] * k + [c])

    @classmethod
    def one(cls) -> "QPoly":
        return cls([1])

    @classmethod
    def zero(cls) -> "QPoly":
        return cls()

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = QPoly([other])
        return isinstance(other, QPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "QPoly") -> "QPoly":
        if isinstance(other, int):
            other = QPoly([other])
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return QPoly([x + (b[k] if k < len(b) else 0) for k, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly([-x for x in self.coeffs])

    def __sub__(self, other: "QPoly") -> "QPoly":
        return self + (-other)

    def __mul__(self, other) -> "QPoly":
        if isinstance(other, int):
            return QPoly([other * x for x in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "QPoly":
        if n < 0:
            raise ValueError("negative power")
        out, base = QPoly.one(), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k: int) -> "QPoly":
        """Multiply by ``q**k``."""
        return QPoly((0,) * k + self.coeffs) if self.coeffs else self

    def __call__(self, q: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def at_one(self) -> int:
        return sum(self.coeffs)

    def __repr__(self) -> str:
        return f"QPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        return self.format()

    def format(self) -> str:
        """Expanded, ascending powers: ``"q + 3q^2 - q^4"``."""
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                var = "q" if k == 1 else f"q^{k}"
                body = var if mag == 1 else f"{mag}{var}"
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            return "0"
        head_sign, head = terms[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def to_json(self) -> list[int]:
        return list(self.coeffs)

    @classmethod
    def from_json(cls, data: Sequence[int]) -> "QPoly":
        return cls(data)

    @classmethod
    def parse(cls, text: str) -> "QPoly":
        return _Parser(text).parse()


class _Parser:
    """Recursive-descent parser for printed forms like ``q^2(q+1)^3`` or
    ``(q^3+2q^2+3q+1)q^{10}``.  Juxtaposition is multiplication."""

    _TOKEN = re.compile(r"\s*(?:(\d+)|(q)|(\^)|([()+\-*{}]))")

    def __init__(self, text: str):
        self.tokens = []
        pos = 0
        text = text.strip().strip("$")
        while pos < len(text):
            m = self._TOKEN.match(text, pos)
            if not m:
                if text[pos:].strip() == "":
                    break
                raise ValueError(f"cannot parse polynomial {text!r} at {pos}")
            num, var, caret, sym = m.groups()
            if num is not None:
                self.tokens.append(("num", int(num)))
            elif var:
                self.tokens.append(("q", None))
            elif caret:
                self.tokens.append(("^", None))
            else:
                self.tokens.append((sym, None))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def take(self, kind=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            raise ValueError(f"expected {kind}, got {tok[0]}")
        self.i += 1
        return tok

    def parse(self) -> QPoly:
        p = self.expr()
        if self.i != len(self.tokens):
            raise ValueError("trailing tokens in polynomial")
        return p

    def expr(self) -> QPoly:
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
        acc = self.term() * sign
        while self.peek() in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
            acc = acc + self.term() * sign
        return acc

    def term(self) -> QPoly:
        acc = self.factor()
        while self.peek() in ("num", "q", "(", "*"):
            if self.peek() == "*":
                self.take()
            acc = acc * self.factor()
        return acc

    def factor(self) -> QPoly:
        kind = self.peek()
        if kind == "num":
            base = QPoly([self.take()[1]])
        elif kind == "q":
            self.take()
            base = QPoly.monomial(1)
        elif kind == "(":
            self.take()
            base = self.expr()
            self.take(")")
        else:
            raise ValueError(f"unexpected token {kind!r}")
        if self.peek() == "^":
            self.take()
            if self.peek() == "{":
                self.take()
                n = self.take("num")[1]
                self.take("}")
            else:
                n = self.take("num")[1]
            base = base**n
        return base
