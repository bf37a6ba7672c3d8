# Copyright (c) 2026 The hexec Authors. All rights reserved.
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Pattern

from hexec.hexpr.nodes import (
    ROOT_PATH,
    HExpr,
    Operation,
    OpKind,
    depth,
    execution_order,
    iter_nodes,
)
from hexec.hexpr.placeholders import find_placeholders

DEFAULT_MAX_DEPTH = 16

UNRESOLVABLE_PLACEHOLDER = "unresolvable-placeholder"
JOIN_WITHOUT_PLACEHOLDER = "join-without-placeholder"
DEPTH_EXCEEDED = "depth-exceeded"


class Severity(Enum):
    ERROR = "ERROR"
    WARNING = "WARNING"


@dataclass(frozen=True)
class Diagnostic:
    code: str
    message: str
    node_path: str
    severity: Severity = Severity.ERROR

    def to_dict(self) -> dict:
        return {
            "code": self.code,
            "message": self.message,
            "node_path": self.node_path,
            "severity": self.severity.value,
        }


@dataclass
class ValidationReport:
    executable: bool
    diagnostics: List[Diagnostic] = field(default_factory=list)

    @property
    def errors(self) -> List[Diagnostic]:
        return [d for d in self.diagnostics if d.severity == Severity.ERROR]

    @property
    def warnings(self) -> List[Diagnostic]:
        return [d for d in self.diagnostics if d.severity == Severity.WARNING]

    def to_dict(self) -> dict:
        return {
            "executable": self.executable,
            "diagnostics": [d.to_dict() for d in self.diagnostics],
        }


def _has_placeholder(expr: HExpr, regex: Optional[Pattern]) -> bool:
    return any(
        find_placeholders(leaf.primitive.text, regex) for leaf in execution_order(expr)
    )


def validate(
    expr: HExpr,
    max_depth: int = DEFAULT_MAX_DEPTH,
    regex: Optional[Pattern] = None,
) -> ValidationReport:
    """
    Static executability check.

    A placeholder k inside the i-th executed primitive is resolvable only when
    k < i, since slot k is written by the k-th executed primitive. JOINs whose
    left operand never reads an earlier answer are legal but suspicious and
    get a warning.
    """
    diagnostics = []

    tree_depth = depth(expr)
    if tree_depth > max_depth:
        diagnostics.append(
            Diagnostic(
                DEPTH_EXCEEDED,
                f"Expression depth {tree_depth} exceeds the limit of {max_depth}",
                ROOT_PATH,
            )
        )

    for position, leaf in enumerate(execution_order(expr), start=1):
        for ref in find_placeholders(leaf.primitive.text, regex):
            if ref.index >= position:
                diagnostics.append(
                    Diagnostic(
                        UNRESOLVABLE_PLACEHOLDER,
                        f"{ref.surface_form} refers to answer slot {ref.index} but "
                        f"only {position - 1} answer(s) exist when this primitive runs",
                        leaf.path,
                    )
                )

    for path, node in iter_nodes(expr):
        if (
            isinstance(node, Operation)
            and node.kind == OpKind.JOIN
            and not _has_placeholder(node.left, regex)
        ):
            diagnostics.append(
                Diagnostic(
                    JOIN_WITHOUT_PLACEHOLDER,
                    "JOIN left operand does not use any earlier answer",
                    path,
                    Severity.WARNING,
                )
            )

    executable = not any(d.severity == Severity.ERROR for d in diagnostics)
    return ValidationReport(executable, diagnostics)
