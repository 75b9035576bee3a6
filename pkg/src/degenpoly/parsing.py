"""Text forms of polynomials.

Two input forms are accepted:

* expressions such as ``X^4 - 2X^2 - 2`` or ``3*x^2 + x - 7`` (like terms are
  combined, whitespace is ignored, ``X`` and ``x`` are the same variable);
* coefficient lists ``coeffs: 3,0,-2``, in DESCENDING powers, a_0 first.
"""

from __future__ import annotations

from .polycore import IntPoly


class ParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


def parse_poly(text: str) -> IntPoly:
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty input", 0)
    if stripped.lower().startswith("coeffs:"):
        return _parse_coeffs(text)
    return _Parser(text).parse()


def _parse_coeffs(text: str) -> IntPoly:
    start = text.lower().index("coeffs:") + len("coeffs:")
    out = []
    pos = start
    for piece in text[start:].split(","):
        item = piece.strip()
        try:
            out.append(int(item))
        except ValueError:
            lead = len(piece) - len(piece.lstrip())
            raise ParseError(f"bad coefficient {item!r}", pos + lead) from None
        pos += len(piece) + 1
    return IntPoly(out)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.i = 0
        self.terms: dict[int, int] = {}

    def _skip(self):
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def _peek(self) -> str:
        self._skip()
        return self.text[self.i] if self.i < len(self.text) else ""

    def _uint(self) -> int | None:
        self._skip()
        j = self.i
        while j < len(self.text) and self.text[j].isdigit():
            j += 1
        if j == self.i:
            return None
        v = int(self.text[self.i:j])
        self.i = j
        return v

    def parse(self) -> IntPoly:
        sign = 1
        if self._peek() in "+-" and self._peek():
            sign = -1 if self.text[self.i] == "-" else 1
            self.i += 1
        self._term(sign)
        while True:
            c = self._peek()
            if not c:
                break
            if c not in "+-":
                raise ParseError(f"unexpected {c!r}", self.i)
            self.i += 1
            self._term(-1 if c == "-" else 1)
        if not self.terms:
            return IntPoly()
        top = max(self.terms)
        return IntPoly([self.terms.get(e, 0) for e in range(top, -1, -1)])

    def _term(self, sign: int):
        start = self.i
        coef = self._uint()
        c = self._peek()
        if c == "*":
            if coef is None:
                raise ParseError("'*' without a coefficient", self.i)
            self.i += 1
            c = self._peek()
            if c not in ("x", "X") or not c:
                raise ParseError("expected variable after '*'", self.i)
        if c in ("x", "X") and c:
            self.i += 1
            exp = 1
            if self._peek() == "^":
                self.i += 1
                e = self._uint()
                if e is None:
                    raise ParseError("expected exponent after '^'", self.i)
                exp = e
            value = 1 if coef is None else coef
        else:
            if coef is None:
                self._skip()
                raise ParseError("expected a term", self.i if self.i < len(self.text) else start)
            exp, value = 0, coef
        self.terms[exp] = self.terms.get(exp, 0) + sign * value


def render(f: IntPoly) -> str:
    if not f:
        return "0"
    n = f.deg
    parts = []
    for i, c in enumerate(f.coeffs):
        if c == 0:
            continue
        e = n - i
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            var = "X" if e == 1 else f"X^{e}"
            body = var if mag == 1 else f"{mag}{var}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


def recurrence_to_charpoly(a) -> IntPoly:
    """Characteristic polynomial X^n - a_1 X^(n-1) - ... - a_n of a recurrence."""
    a = [int(x) for x in a]
    if not a:
        raise ValueError("recurrence needs at least one coefficient")
    if a[-1] == 0:
        raise ValueError("last recurrence coefficient a_n must be nonzero")
    return IntPoly([1] + [-x for x in a])
