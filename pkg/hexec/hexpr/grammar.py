# Copyright (c) 2026 The hexec Authors. All rights reserved.
"""
Textual form of H-expressions.

    expr      := operation | primitive
    operation := OPNAME "[" expr "," expr "]"
    primitive := question text; "\\," "\\[" "\\]" and "\\\\" escape the
                 characters that would otherwise delimit it

Op names are case-insensitive. A top-level primitive may contain bare commas;
inside an operation the first unescaped comma at the operation's own bracket
depth separates the two operands.
"""
import re

from hexec.common.results import HexecExceptionParseError
from hexec.hexpr.nodes import HExpr, Operation, Primitive, lookup_op

_ESCAPABLE = ",[]\\"
_OP_HEAD = re.compile(r"([A-Za-z][A-Za-z0-9_]*[=<>]?)\s*\[")
_TRAILING_WORD = re.compile(r"([A-Za-z][A-Za-z0-9_]*[=<>]?)\s*$")

# Bound on operation nesting while parsing (validation applies the
# configured, much lower, depth limit).
MAX_PARSE_NESTING = 200


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def parse(self) -> HExpr:
        if not self.text.strip():
            raise HexecExceptionParseError("empty expression", 0)
        node = self._node(top_level=True, nesting=0)
        self._skip_ws()
        if self.pos < len(self.text):
            if self.text[self.pos] == "]":
                raise HexecExceptionParseError("unbalanced ']'", self.pos)
            raise HexecExceptionParseError(
                "unexpected text after expression", self.pos
            )
        return node

    def _skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _node(self, top_level: bool, nesting: int) -> HExpr:
        self._skip_ws()
        m = _OP_HEAD.match(self.text, self.pos)
        if m is None:
            return self._primitive(top_level)

        kind = lookup_op(m.group(1))
        if kind is None:
            raise HexecExceptionParseError(
                f"unknown operation '{m.group(1)}'", self.pos
            )
        if nesting >= MAX_PARSE_NESTING:
            raise HexecExceptionParseError("expression nested too deeply", self.pos)

        opened_at = m.end() - 1
        self.pos = m.end()
        left = self._node(top_level=False, nesting=nesting + 1)
        self._expect(",", opened_at)
        right = self._node(top_level=False, nesting=nesting + 1)
        self._expect("]", opened_at)
        return Operation(kind, left, right)

    def _expect(self, delimiter: str, opened_at: int):
        self._skip_ws()
        if self.pos >= len(self.text):
            raise HexecExceptionParseError("unbalanced '['", opened_at)
        found = self.text[self.pos]
        if found == delimiter:
            self.pos += 1
            return
        if delimiter == "," and found == "]":
            raise HexecExceptionParseError(
                "operation needs 2 operands, found 1", self.pos
            )
        if delimiter == "]" and found == ",":
            raise HexecExceptionParseError(
                "operation needs 2 operands, found more", self.pos
            )
        raise HexecExceptionParseError(f"expected '{delimiter}'", self.pos)

    def _primitive(self, top_level: bool) -> Primitive:
        start = self.pos
        text = self.text
        chars = []
        while self.pos < len(text):
            c = text[self.pos]
            if c == "\\" and self.pos + 1 < len(text) and text[self.pos + 1] in _ESCAPABLE:
                chars.append(text[self.pos + 1])
                self.pos += 2
                continue
            if c == "[":
                raise self._bracket_error()
            if c == "]":
                if top_level:
                    raise HexecExceptionParseError("unbalanced ']'", self.pos)
                break
            if c == "," and not top_level:
                break
            chars.append(c)
            self.pos += 1

        question = "".join(chars).strip()
        if not question:
            raise HexecExceptionParseError("empty operand", start)
        return Primitive(question)

    def _bracket_error(self) -> HexecExceptionParseError:
        m = _TRAILING_WORD.search(self.text, 0, self.pos)
        if m is not None:
            if lookup_op(m.group(1)) is None:
                return HexecExceptionParseError(
                    f"unknown operation '{m.group(1)}'", m.start(1)
                )
            return HexecExceptionParseError(
                f"operation '{m.group(1)}' inside a primitive", m.start(1)
            )
        return HexecExceptionParseError("unbalanced '['", self.pos)


def parse_hexpression(text: str) -> HExpr:
    return _Parser(text).parse()


def escape_primitive(text: str) -> str:
    return "".join("\\" + c if c in _ESCAPABLE else c for c in text)


def serialize(expr: HExpr) -> str:
    """Canonical form: upper-case op names, `OP[ left, right ]` spacing."""
    if isinstance(expr, Primitive):
        return escape_primitive(expr.text)
    return f"{expr.kind.value}[ {serialize(expr.left)}, {serialize(expr.right)} ]"
