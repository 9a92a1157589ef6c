"""A small closed expression language for building sequences and
enumerations, with a recursive-descent parser.

Grammar (whitespace insignificant, ASCII only):

    seq  := "zeros" | "ones"
          | "periodic(" bits ")"
          | "natrow(" nat ")"
          | "prepend(" bits "," seq ")"
          | "compl(" seq ")"
          | "diagc(" enum ")"
    enum := "figure5"
          | "const(" seq ")"
          | "interleave(" enum "," enum ")"
          | "spliteven(" enum ")"
          | "splitodd(" enum ")"
          | "insert(" enum "," nat "," seq ")"
    bits := one or more of {0,1}
    nat  := decimal digits

There is no recursion or binding, so every program denotes a total value and
the diagonal complement of any program enumeration is always well defined.

Errors carry a source position and an expected-token set, and fall into
three classes: syntax (unexpected token), arity (wrong argument count), and
type (sequence expression where an enumeration is required, or vice versa).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import bitseq, diagonal, listmatrix
from .bitseq import BitSeq
from .diagonal import Enumeration

__all__ = [
    "Ast",
    "Span",
    "ParseError",
    "SEQ_KINDS",
    "ENUM_KINDS",
    "parse",
    "parse_seq",
    "parse_enum",
    "unparse",
    "eval_seq",
    "eval_enum",
]

# kind -> argument signature ("bits", "nat", "seq", "enum")
_SEQ_SIGS: dict[str, tuple[str, ...]] = {
    "zeros": (),
    "ones": (),
    "periodic": ("bits",),
    "natrow": ("nat",),
    "prepend": ("bits", "seq"),
    "compl": ("seq",),
    "diagc": ("enum",),
}
_ENUM_SIGS: dict[str, tuple[str, ...]] = {
    "figure5": (),
    "const": ("seq",),
    "interleave": ("enum", "enum"),
    "spliteven": ("enum",),
    "splitodd": ("enum",),
    "insert": ("enum", "nat", "seq"),
}

SEQ_KINDS = frozenset(_SEQ_SIGS)
ENUM_KINDS = frozenset(_ENUM_SIGS)


@dataclass(frozen=True)
class Span:
    line: int
    column: int
    length: int


@dataclass(frozen=True)
class Ast:
    """One operator node.  `value` holds the literal payload for operators
    taking a bits or nat argument; spans are excluded from equality so that
    pretty-print/reparse roundtrips compare structurally."""

    kind: str
    children: tuple["Ast", ...] = ()
    value: int | str | None = None
    span: Span = field(default=Span(1, 1, 0), compare=False)

    @property
    def is_seq(self) -> bool:
        return self.kind in SEQ_KINDS


class ParseError(Exception):
    """A positioned parse failure.  `error_class` is one of "syntax",
    "arity", "type"."""

    def __init__(
        self,
        message: str,
        line: int,
        column: int,
        expected: frozenset[str] = frozenset(),
        error_class: str = "syntax",
    ):
        self.message = message
        self.line = line
        self.column = column
        self.expected = expected
        self.error_class = error_class
        super().__init__(f"{line}:{column}: {message}")


@dataclass(frozen=True)
class _Token:
    kind: str  # "name", "digits", "lparen", "rparen", "comma", "eof"
    text: str
    offset: int
    line: int
    column: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    i = 0
    line = 1
    line_start = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            i += 1
            line_start = i
            continue
        if ch in " \t\r":
            i += 1
            continue
        col = i - line_start + 1
        if ch.isalpha():
            j = i
            while j < n and (text[j].isalpha() or text[j].isdigit()):
                j += 1
            tokens.append(_Token("name", text[i:j], i, line, col))
            i = j
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("digits", text[i:j], i, line, col))
            i = j
        elif ch == "(":
            tokens.append(_Token("lparen", ch, i, line, col))
            i += 1
        elif ch == ")":
            tokens.append(_Token("rparen", ch, i, line, col))
            i += 1
        elif ch == ",":
            tokens.append(_Token("comma", ch, i, line, col))
            i += 1
        else:
            raise ParseError(
                f"unexpected character {ch!r}",
                line,
                col,
                expected=frozenset({"name", "digits", "(", ")", ","}),
            )
    tokens.append(_Token("eof", "", n, line, n - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def _peek(self) -> _Token:
        return self.tokens[self.pos]

    def _next(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def _fail(self, tok, message, expected=frozenset(), error_class="syntax"):
        raise ParseError(message, tok.line, tok.column, expected, error_class)

    def _expect(self, kind: str, what: str) -> _Token:
        tok = self._next()
        if tok.kind != kind:
            self._fail(
                tok,
                f"expected {what}, found {tok.text or 'end of input'!r}",
                expected=frozenset({what}),
            )
        return tok

    def parse_expr(self, want: str) -> Ast:
        """Parse one expression of type `want` ("seq" or "enum")."""
        sigs = _SEQ_SIGS if want == "seq" else _ENUM_SIGS
        others = _ENUM_SIGS if want == "seq" else _SEQ_SIGS
        tok = self._next()
        if tok.kind != "name":
            self._fail(
                tok,
                f"expected a {self._typename(want)} expression, "
                f"found {tok.text or 'end of input'!r}",
                expected=frozenset(sigs),
            )
        name = tok.text
        if name in others:
            self._fail(
                tok,
                f"{name!r} is an {self._typename(_other(want))} operator, "
                f"but a {self._typename(want)} expression is required here",
                expected=frozenset(sigs),
                error_class="type",
            )
        if name not in sigs:
            self._fail(
                tok,
                f"unknown operator {name!r}",
                expected=frozenset(sigs),
            )
        sig = sigs[name]
        if not sig:
            return Ast(name, span=self._span(tok, tok.offset + len(tok.text)))
        self._expect("lparen", "(")
        children: list[Ast] = []
        value: int | str | None = None
        for idx, arg in enumerate(sig):
            if idx > 0:
                sep = self._next()
                if sep.kind == "rparen":
                    self._fail(
                        sep,
                        f"too few arguments to {name!r}: expected "
                        f"{len(sig)}, got {idx}",
                        expected=frozenset({","}),
                        error_class="arity",
                    )
                if sep.kind != "comma":
                    self._fail(
                        sep,
                        f"expected ',', found {sep.text!r}",
                        expected=frozenset({","}),
                    )
            if arg in ("seq", "enum"):
                nxt = self._peek()
                if nxt.kind == "rparen":
                    self._fail(
                        nxt,
                        f"too few arguments to {name!r}: expected "
                        f"{len(sig)}, got {idx}",
                        expected=frozenset({arg}),
                        error_class="arity",
                    )
                children.append(self.parse_expr(arg))
            elif arg == "bits":
                lit = self._next()
                if lit.kind == "rparen":
                    self._fail(
                        lit,
                        f"too few arguments to {name!r}: expected "
                        f"{len(sig)}, got {idx}",
                        expected=frozenset({"bits"}),
                        error_class="arity",
                    )
                if lit.kind != "digits" or set(lit.text) - {"0", "1"}:
                    self._fail(
                        lit,
                        f"expected a bit string, found {lit.text or 'end of input'!r}",
                        expected=frozenset({"bits"}),
                    )
                value = lit.text
            else:  # nat
                lit = self._next()
                if lit.kind == "rparen":
                    self._fail(
                        lit,
                        f"too few arguments to {name!r}: expected "
                        f"{len(sig)}, got {idx}",
                        expected=frozenset({"nat"}),
                        error_class="arity",
                    )
                if lit.kind != "digits":
                    self._fail(
                        lit,
                        f"expected a natural number, found "
                        f"{lit.text or 'end of input'!r}",
                        expected=frozenset({"nat"}),
                    )
                value = int(lit.text)
        closer = self._next()
        if closer.kind == "comma":
            self._fail(
                closer,
                f"too many arguments to {name!r}: expected {len(sig)}",
                expected=frozenset({")"}),
                error_class="arity",
            )
        if closer.kind != "rparen":
            self._fail(
                closer,
                f"expected ')', found {closer.text or 'end of input'!r}",
                expected=frozenset({")"}),
            )
        end = closer.offset + 1
        return Ast(name, tuple(children), value, self._span(tok, end))

    def _span(self, head: _Token, end_offset: int) -> Span:
        return Span(head.line, head.column, end_offset - head.offset)

    @staticmethod
    def _typename(want: str) -> str:
        return "sequence" if want == "seq" else "enumeration"

    def finish(self, ast: Ast) -> Ast:
        tok = self._peek()
        if tok.kind != "eof":
            self._fail(
                tok,
                f"trailing input after expression: {tok.text!r}",
                expected=frozenset({"end of input"}),
            )
        return ast


def _other(want: str) -> str:
    return "enum" if want == "seq" else "seq"


def parse_seq(text: str) -> Ast:
    """Parse a sequence expression; raises ParseError on failure."""
    p = _Parser(text)
    return p.finish(p.parse_expr("seq"))


def parse_enum(text: str) -> Ast:
    """Parse an enumeration expression; raises ParseError on failure."""
    p = _Parser(text)
    return p.finish(p.parse_expr("enum"))


def parse(text: str) -> Ast:
    """Parse a program of either type.

    The grammar is keyword-disjoint, so the head operator decides the
    type; unknown heads report the union of both operator sets.
    """
    p = _Parser(text)
    head = p._peek()
    if head.kind == "name" and head.text in ENUM_KINDS:
        return p.finish(p.parse_expr("enum"))
    if head.kind == "name" and head.text in SEQ_KINDS:
        return p.finish(p.parse_expr("seq"))
    p._fail(
        head,
        f"expected an expression, found {head.text or 'end of input'!r}",
        expected=SEQ_KINDS | ENUM_KINDS,
    )


def unparse(a: Ast) -> str:
    """Canonical textual form; parse(unparse(a)) == a modulo spans."""
    if a.kind in _SEQ_SIGS:
        sig = _SEQ_SIGS[a.kind]
    elif a.kind in _ENUM_SIGS:
        sig = _ENUM_SIGS[a.kind]
    else:
        raise ValueError(f"unknown node kind {a.kind!r}")
    if not sig:
        return a.kind
    parts: list[str] = []
    child_iter = iter(a.children)
    for arg in sig:
        if arg in ("seq", "enum"):
            parts.append(unparse(next(child_iter)))
        else:
            parts.append(str(a.value))
    return f"{a.kind}({','.join(parts)})"


def eval_seq(a: Ast) -> BitSeq:
    """Denotation of a sequence expression (compositional and total)."""
    if a.kind == "zeros":
        return bitseq.zeros()
    if a.kind == "ones":
        return bitseq.ones()
    if a.kind == "periodic":
        return bitseq.periodic(a.value)
    if a.kind == "natrow":
        return bitseq.nat_row(a.value)
    if a.kind == "prepend":
        return bitseq.prepend(a.value, eval_seq(a.children[0]))
    if a.kind == "compl":
        return bitseq.complement(eval_seq(a.children[0]))
    if a.kind == "diagc":
        return diagonal.antidiagonal(eval_enum(a.children[0]))
    raise ValueError(f"not a sequence expression: {a.kind!r}")


def eval_enum(a: Ast) -> Enumeration:
    """Denotation of an enumeration expression (compositional and total)."""
    if a.kind == "figure5":
        return listmatrix.matrix_enumeration()
    if a.kind == "const":
        return diagonal.constant(eval_seq(a.children[0]))
    if a.kind == "interleave":
        return diagonal.interleave(
            eval_enum(a.children[0]), eval_enum(a.children[1])
        )
    if a.kind == "spliteven":
        return diagonal.split(eval_enum(a.children[0]))[0]
    if a.kind == "splitodd":
        return diagonal.split(eval_enum(a.children[0]))[1]
    if a.kind == "insert":
        return diagonal.insert(
            eval_enum(a.children[0]), a.value, eval_seq(a.children[1])
        )
    raise ValueError(f"not an enumeration expression: {a.kind!r}")
