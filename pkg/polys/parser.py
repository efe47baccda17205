"""
Polynomial text grammar

    expr     := term (('+' | '-') term)*
    term     := unary ('*' unary)*
    unary    := ('+' | '-') unary | power
    power    := atom ('^' INTEGER)?
    atom     := INTEGER ('/' INTEGER)? | 'x' | '(' expr ')'

Implicit multiplication is rejected. A text made only of signed rational
literals separated by commas or whitespace is read as an ascending
coefficient list instead.
"""

import re
from fractions import Fraction
from typing import List, NamedTuple, Optional

from commons import PolySyntaxError, format_rational, str_to_values

from .poly import Poly

VARIABLE = "x"

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(.))")
_COEFF_LIST = re.compile(
    r"^\s*[+-]?\d+(?:/\d+)?(?:(?:\s*,\s*|\s+)[+-]?\d+(?:/\d+)?)*\s*,?\s*$"
)


class Token(NamedTuple):
    kind: str  # 'num', 'ident', 'op', 'end'
    text: str
    position: int


def _tokenize(text: str) -> List[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        match = _TOKEN.match(text, pos)
        assert match is not None
        number, ident, other = match.groups()
        start = match.start(match.lastindex or 0)
        if number is not None:
            tokens.append(Token("num", number, start))
        elif ident is not None:
            tokens.append(Token("ident", ident, start))
        elif other in "+-*^/()":
            tokens.append(Token("op", other, start))
        else:
            raise PolySyntaxError(f"unexpected character '{other}'", start)
        pos = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def _advance(self) -> Token:
        token = self.current
        self.index += 1
        return token

    def _accept(self, op: str) -> bool:
        if self.current.kind == "op" and self.current.text == op:
            self.index += 1
            return True
        return False

    def _expect_number(self, what: str) -> int:
        token = self.current
        if token.kind != "num":
            raise PolySyntaxError(
                f"expected {what}, found {token.text or 'end of input'!r}",
                token.position,
            )
        self._advance()
        return int(token.text)

    def parse(self) -> Poly:
        if self.current.kind == "end":
            raise PolySyntaxError("empty polynomial text", 0)
        result = self._expr()
        token = self.current
        if token.kind != "end":
            if token.kind in ("num", "ident") or token.text == "(":
                raise PolySyntaxError(
                    "implicit multiplication is not supported, use '*'",
                    token.position,
                )
            raise PolySyntaxError(
                f"unexpected token {token.text!r}", token.position
            )
        return result

    def _expr(self) -> Poly:
        result = self._term()
        while True:
            if self._accept("+"):
                result = result + self._term()
            elif self._accept("-"):
                result = result - self._term()
            else:
                return result

    def _term(self) -> Poly:
        result = self._unary()
        while self._accept("*"):
            result = result * self._unary()
        return result

    def _unary(self) -> Poly:
        if self._accept("-"):
            return -self._unary()
        if self._accept("+"):
            return self._unary()
        return self._power()

    def _power(self) -> Poly:
        base = self._atom()
        if not self._accept("^"):
            return base
        token = self.current
        if token.kind == "op" and token.text == "-":
            raise PolySyntaxError("negative exponent", token.position)
        return base ** self._expect_number("integer exponent")

    def _atom(self) -> Poly:
        token = self.current
        if token.kind == "num":
            self._advance()
            numerator = int(token.text)
            if self._accept("/"):
                den_position = self.current.position
                denominator = self._expect_number("denominator")
                if denominator == 0:
                    raise PolySyntaxError("zero denominator", den_position)
                return Poly.constant(Fraction(numerator, denominator))
            return Poly.constant(numerator)
        if token.kind == "ident":
            if token.text != VARIABLE:
                raise PolySyntaxError(
                    f"multiple variables: only '{VARIABLE}' is supported,"
                    f" found '{token.text}'",
                    token.position,
                )
            self._advance()
            return Poly.x()
        if self._accept("("):
            inner = self._expr()
            if not self._accept(")"):
                raise PolySyntaxError(
                    "expected ')'", self.current.position
                )
            return inner
        raise PolySyntaxError(
            f"unexpected {token.text or 'end of input'!r}", token.position
        )


def is_coeff_list(text: str) -> bool:
    """
    Without a comma, only the first chunk may carry a sign: "3 -2" reads as
    the expression 3 - 2, not as a list
    """
    if _COEFF_LIST.match(text) is None:
        return False
    if "," in text:
        return True
    return not any(chunk[0] in "+-" for chunk in text.split()[1:])


def parse_coeff_list(text: str) -> Poly:
    """
    Ascending coefficient list, e.g. '-6, 11, -6, 1' or '1 0 1'
    """
    chunks = str_to_values(text, sep=",")
    if not chunks:
        raise PolySyntaxError("empty coefficient list", 0)
    coeffs = []
    for chunk in chunks:
        parts = chunk.split("/")
        try:
            if len(parts) == 1:
                value = Fraction(int(parts[0]))
            elif len(parts) == 2:
                value = Fraction(int(parts[0]), int(parts[1]))
            else:
                raise ValueError(chunk)
        except (ValueError, ZeroDivisionError):
            raise PolySyntaxError(
                f"invalid coefficient {chunk!r}", text.find(chunk)
            ) from None
        coeffs.append(value)
    return Poly(tuple(coeffs))


def parse_poly(text: str, coeffs: Optional[bool] = None) -> Poly:
    """
    Parse polynomial text

    Args:
        text (str): expression in x, or ascending coefficient list
        coeffs (bool): force the coefficient-list reading (True) or the
            expression reading (False); autodetect when None

    Returns:
        canonical Poly
    """
    if coeffs is None:
        coeffs = is_coeff_list(text)
    if coeffs:
        return parse_coeff_list(text)
    return _Parser(text).parse()


def format_poly(p: Poly) -> str:
    """
    Canonical expression text, descending powers, parseable by parse_poly
    e.g. [-6, 11, -6, 1] -> 'x^3 - 6*x^2 + 11*x - 6'
    """
    if p.is_zero:
        return "0"
    terms = []
    for j in range(p.degree, -1, -1):
        c = p[j]
        if c == 0:
            continue
        magnitude = abs(c)
        if j == 0:
            body = format_rational(magnitude)
        else:
            power = VARIABLE if j == 1 else f"{VARIABLE}^{j}"
            body = (
                power
                if magnitude == 1
                else f"{format_rational(magnitude)}*{power}"
            )
        terms.append((c < 0, body))
    negative, body = terms[0]
    out = f"-{body}" if negative else body
    for negative, body in terms[1:]:
        out += f" - {body}" if negative else f" + {body}"
    return out
