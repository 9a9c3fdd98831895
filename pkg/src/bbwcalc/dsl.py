"""Parser for the bundle-expression language.

    expr   := term ("+" term)*
    term   := atom ("*" atom)*
    atom   := "U" | "Q" | "O(" int ")" | "dual(" expr ")" | "end0(" expr ")"
            | "wedge(" nat "," expr ")" | "sym(" nat "," expr ")"
            | "schur([" ints "]," expr ")" | "(" expr ")"

Whitespace is ignored.  ``str(expr)`` prints the normal form, which parses
back to the same tree.
"""
import re

from .bundles import O, Q, U, DirectSum, Dual, End0, Schur, Sym, Tensor, Wedge
from .errors import InvalidInput
from .symcore import Partition

_TOKEN = re.compile(r"\s*(?:(?P<int>-?\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<punct>[()\[\],*+]))")


class ParseError(InvalidInput):
    """Syntax, arity or partition error at a byte offset of the input."""

    def __init__(self, message, offset, expected=(), kind="syntax"):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset
        self.expected = sorted(expected)
        self.kind = kind


def _tokenize(text):
    tokens, pos = [], 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            pos += len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[pos]!r}", pos, {"U", "Q", "O", "(", "+", "*"})
        kind = m.lastgroup
        value = m.group(kind)
        tokens.append((kind, value, m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


_ATOMS = {"U", "Q", "O", "dual", "end0", "wedge", "sym", "schur", "("}


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    @property
    def tok(self):
        return self.tokens[self.i]

    def expect(self, value, kind="syntax"):
        k, v, off = self.tok
        if v != value or k == "end" and value:
            raise ParseError(f"expected {value!r}, found {v or 'end of input'!r}", off, {value}, kind)
        self.i += 1

    def integer(self, nat=False, what="integer"):
        k, v, off = self.tok
        if k != "int":
            raise ParseError(f"expected {what}, found {v or 'end of input'!r}", off, {what},
                             "arity" if v in (",", ")") else "syntax")
        value = int(v)
        if nat and value < 0:
            raise ParseError(f"{what} must be non-negative, got {value}", off, {what}, "arity")
        self.i += 1
        return value

    def parse(self):
        e = self.expr()
        k, v, off = self.tok
        if k != "end":
            raise ParseError(f"unexpected {v!r}", off, {"+", "*", "end of input"})
        return e

    def expr(self):
        e = self.term()
        while self.tok[1] == "+":
            self.i += 1
            e = DirectSum(e, self.term())
        return e

    def term(self):
        e = self.atom()
        while self.tok[1] == "*":
            self.i += 1
            e = Tensor(e, self.atom())
        return e

    def atom(self):
        k, v, off = self.tok
        if v == "U" and k == "name":
            self.i += 1
            return U()
        if v == "Q" and k == "name":
            self.i += 1
            return Q()
        if v == "(":
            self.i += 1
            e = self.expr()
            self.expect(")")
            return e
        if k == "name" and v == "O":
            self.i += 1
            self.expect("(")
            t = self.integer(what="twist")
            self.expect(")", "arity")
            return O(t)
        if k == "name" and v in ("dual", "end0"):
            self.i += 1
            self.expect("(")
            arg = self.expr()
            self.expect(")", "arity")
            return Dual(arg) if v == "dual" else End0(arg)
        if k == "name" and v in ("wedge", "sym"):
            self.i += 1
            self.expect("(")
            p = self.integer(nat=True, what="degree")
            self.expect(",", "arity")
            arg = self.expr()
            self.expect(")", "arity")
            return Wedge(p, arg) if v == "wedge" else Sym(p, arg)
        if k == "name" and v == "schur":
            self.i += 1
            self.expect("(")
            start = self.tok[2]
            self.expect("[")
            parts = []
            if self.tok[1] != "]":
                parts.append(self.integer(what="part"))
                while self.tok[1] == ",":
                    self.i += 1
                    parts.append(self.integer(what="part"))
            self.expect("]")
            try:
                shape = Partition(tuple(parts))
            except InvalidInput:
                raise ParseError(f"malformed partition {parts}", start, {"weakly decreasing non-negative parts"},
                                 "partition") from None
            self.expect(",", "arity")
            arg = self.expr()
            self.expect(")", "arity")
            return Schur(shape, arg)
        raise ParseError(f"expected a bundle, found {v or 'end of input'!r}", off, _ATOMS)


def parse(text):
    """Parse DSL text into a BundleExpr.

    >>> str(parse("wedge(2, wedge(2, Q))"))
    'wedge(2,wedge(2,Q))'
    """
    return _Parser(text).parse()


def pretty(expr):
    return str(expr)
