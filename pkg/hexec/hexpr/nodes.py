# Copyright (c) 2026 The hexec Authors. All rights reserved.
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, List, Optional, Tuple, Union

ROOT_PATH = "$"


class OpKind(Enum):
    """The eight binary operations. Values are the canonical spellings."""

    JOIN = "JOIN"
    UNION = "UNION"
    AND = "AND"
    COMP_EQ = "COMP_="
    COMP_LT = "COMP_<"
    COMP_GT = "COMP_>"
    SUB = "SUB"
    ADD = "ADD"

    @property
    def is_comparison(self) -> bool:
        return self in (OpKind.COMP_EQ, OpKind.COMP_LT, OpKind.COMP_GT)


# Upper-cased spelling -> kind. Lookup is case-insensitive.
_OP_NAMES = {kind.value: kind for kind in OpKind}
_OP_NAMES.update({f"COMP_{s}": OpKind[f"COMP_{s}"] for s in ("EQ", "LT", "GT")})


def lookup_op(name: str) -> Optional[OpKind]:
    return _OP_NAMES.get(name.upper())


@dataclass(frozen=True)
class Primitive:
    text: str
    # Main entity supplied by the dataset builders. Never serialized.
    entity_hint: Optional[str] = field(default=None, compare=False)


@dataclass(frozen=True)
class Operation:
    kind: OpKind
    # q2
    left: "HExpr"
    # q1
    right: "HExpr"


HExpr = Union[Primitive, Operation]


@dataclass(frozen=True)
class LeafRef:
    path: str
    primitive: Primitive


def child_path(path: str, side: str) -> str:
    return f"{path}.{side}"


def node_at(expr: HExpr, path: str) -> HExpr:
    node = expr
    for side in path.split(".")[1:]:
        if not isinstance(node, Operation):
            raise KeyError(path)
        node = node.left if side == "L" else node.right
    return node


def iter_nodes(expr: HExpr, path: str = ROOT_PATH) -> Iterator[Tuple[str, HExpr]]:
    """Pre-order walk yielding (path, node)."""
    yield path, expr
    if isinstance(expr, Operation):
        yield from iter_nodes(expr.left, child_path(path, "L"))
        yield from iter_nodes(expr.right, child_path(path, "R"))


def depth(expr: HExpr) -> int:
    # Nodes on the longest root-to-leaf path; a bare primitive has depth 1.
    if isinstance(expr, Primitive):
        return 1
    return 1 + max(depth(expr.left), depth(expr.right))


def execution_order(expr: HExpr, path: str = ROOT_PATH) -> List[LeafRef]:
    """
    Primitives in the order the executor resolves them: the right subtree
    entirely before the left subtree, recursively. Answer slot k belongs to
    the k-th element.
    """
    if isinstance(expr, Primitive):
        return [LeafRef(path, expr)]
    return execution_order(expr.right, child_path(path, "R")) + execution_order(
        expr.left, child_path(path, "L")
    )


def first_executed_primitive(expr: HExpr) -> Primitive:
    while isinstance(expr, Operation):
        expr = expr.right
    return expr
