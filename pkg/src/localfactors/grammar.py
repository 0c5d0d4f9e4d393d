"""Surface syntax for products of blocks.

::

    rep   := block { "x" block }
    block := "chiR(" int "," cq ")" | "chiC(" int "," cq ")"
           | "indR(" int "," cq ")" | "st(" cusp "," int ")"
    cusp  := "unram(" qq [ "," "zeta" "=" int "/" int ] ")"
           | "ram" [ "(" qq ")" ] | "cusp(" int "," qq ")"
    qq    := [ "-" ] int [ "/" int ]
    cq    := qq [ ("+" | "-") qq "i" ]

Whitespace between tokens is ignored. ``format_rep`` emits the same ASCII and
``parse(format_rep(rho)) == rho`` for canonical products.
"""

from __future__ import annotations

from fractions import Fraction

from .parameters import (
    CQ,
    ArchChar,
    ArchInduced,
    Field,
    FieldMismatch,
    Opaque,
    ParameterError,
    Ramified,
    RepProduct,
    RootOfUnity,
    Segment,
    Unram,
    as_product,
    canonicalize,
)


class ParseError(ValueError):
    def __init__(self, text: str, pos: int, message: str):
        self.text = text
        self.pos = pos
        self.message = message
        super().__init__(f"{message} at column {pos + 1}\n  {text}\n  {' ' * pos}^")


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, lit: str) -> bool:
        self.skip()
        return self.text.startswith(lit, self.pos)

    def accept(self, lit: str) -> bool:
        if self.peek(lit):
            self.pos += len(lit)
            return True
        return False

    def expect(self, lit: str):
        if not self.accept(lit):
            self.fail(f"expected {lit!r}")

    def fail(self, message: str, pos: int | None = None):
        raise ParseError(self.text, self.pos if pos is None else pos, message)

    def digits(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.fail("expected a digit")
        return int(self.text[start:self.pos])

    def integer(self) -> int:
        neg = self.accept("-")
        n = self.digits()
        return -n if neg else n

    def rational(self) -> Fraction:
        num = self.integer()
        if self.accept("/"):
            pos = self.pos
            den = self.digits()
            if den == 0:
                self.fail("zero denominator", pos)
            return Fraction(num, den)
        return Fraction(num)

    def complex_rational(self) -> CQ:
        re = self.rational()
        if self.peek("+") or self.peek("-"):
            sign = -1 if self.text[self.pos] == "-" else 1
            self.pos += 1
            im = self.rational()
            self.expect("i")
            return CQ(re, sign * im)
        return CQ(re)


def _cusp(sc: _Scanner):
    if sc.accept("unram("):
        c = sc.rational()
        zeta = RootOfUnity()
        if sc.accept(","):
            sc.expect("zeta")
            sc.expect("=")
            pos = sc.pos
            j = sc.integer()
            sc.expect("/")
            k = sc.digits()
            if k == 0:
                sc.fail("zero denominator", pos)
            zeta = RootOfUnity.from_fraction(Fraction(j, k))
        sc.expect(")")
        return Unram(c, zeta)
    if sc.accept("ram"):
        if sc.accept("("):
            c = sc.rational()
            sc.expect(")")
            return Ramified(c)
        return Ramified()
    if sc.accept("cusp("):
        pos = sc.pos
        deg = sc.integer()
        sc.expect(",")
        e = sc.rational()
        sc.expect(")")
        try:
            return Opaque(deg, e)
        except ParameterError as exc:
            sc.fail(str(exc), pos)
    sc.fail("expected 'unram(', 'ram' or 'cusp('")


def _block(sc: _Scanner):
    sc.skip()
    start = sc.pos
    try:
        for head, build in (
            ("chiR(", lambda m, r: ArchChar(Field.REAL, m, r)),
            ("chiC(", lambda m, r: ArchChar(Field.COMPLEX, m, r)),
            ("indR(", ArchInduced),
        ):
            if sc.accept(head):
                m = sc.integer()
                sc.expect(",")
                r = sc.complex_rational()
                sc.expect(")")
                return canonicalize(build(m, r))
        if sc.accept("st("):
            base = _cusp(sc)
            sc.expect(",")
            length = sc.integer()
            sc.expect(")")
            return Segment(base, length)
    except ParameterError as exc:
        sc.fail(str(exc), start)
    sc.fail("expected a block: chiR(, chiC(, indR( or st(")


def parse(text: str) -> RepProduct:
    sc = _Scanner(text)
    blocks = [_block(sc)]
    while sc.accept("x"):
        blocks.append(_block(sc))
    sc.skip()
    if sc.pos != len(text):
        sc.fail("unexpected trailing input")
    try:
        return RepProduct(tuple(blocks))
    except FieldMismatch as exc:
        raise ParseError(text, 0, str(exc)) from None


def parse_block(text: str):
    rho = parse(text)
    if len(rho) != 1:
        raise ParseError(text, 0, "expected a single block")
    return rho.blocks[0]


def parse_qq(text: str) -> Fraction:
    sc = _Scanner(text)
    value = sc.rational()
    sc.skip()
    if sc.pos != len(text):
        sc.fail("unexpected trailing input")
    return value


def parse_cq(text: str) -> CQ:
    sc = _Scanner(text)
    value = sc.complex_rational()
    sc.skip()
    if sc.pos != len(text):
        sc.fail("unexpected trailing input")
    return value


def format_cq(z: CQ) -> str:
    return str(CQ.of(z))


def format_block(b) -> str:
    if isinstance(b, ArchChar):
        name = "chiR" if b.field is Field.REAL else "chiC"
        return f"{name}({b.m},{format_cq(b.r)})"
    if isinstance(b, ArchInduced):
        return f"indR({b.m},{format_cq(b.r)})"
    base = b.base
    if isinstance(base, Unram):
        zeta = "" if base.zeta.is_one else f",zeta={base.zeta.j}/{base.zeta.k}"
        cusp = f"unram({base.c}{zeta})"
    elif isinstance(base, Ramified):
        cusp = "ram" if base.c == 0 else f"ram({base.c})"
    else:
        cusp = f"cusp({base.degree},{base.e})"
    return f"st({cusp},{b.length})"


def format_rep(rho) -> str:
    return " x ".join(format_block(b) for b in as_product(rho).blocks)
