# Copyright (c) 2026 The hexec Authors. All rights reserved.
#
# Expression shapes whose leaves still refer to each other by dataset-local
# keys. Realizing a shape renumbers those references to answer slots in
# execution order.
from dataclasses import dataclass
from typing import Dict, List, Optional, Union

from hexec.common.results import HexecExceptionRecordError
from hexec.hexpr.nodes import HExpr, Operation, OpKind, Primitive
from hexec.hexpr.placeholders import match_index, placeholder_regex


@dataclass(frozen=True)
class ShapeLeaf:
    key: int
    # "#k" references name other leaves' keys.
    text: str
    entity_hint: Optional[str] = None


@dataclass(frozen=True)
class ShapeNode:
    kind: OpKind
    left: "Shape"
    right: "Shape"


Shape = Union[ShapeLeaf, ShapeNode]


def shape_order(shape: Shape) -> List[ShapeLeaf]:
    if isinstance(shape, ShapeLeaf):
        return [shape]
    return shape_order(shape.right) + shape_order(shape.left)


def fold_right(kind: OpKind, shapes: List[Shape]) -> Shape:
    """
    Right-nested combination of shapes given in execution order:
    [a, b, c] -> kind[c, kind[b, a]].
    """
    node = shapes[0]
    for shape in shapes[1:]:
        node = ShapeNode(kind, shape, node)
    return node


def realize(shape: Shape, prefix: str, record_id: str) -> HExpr:
    """Turn a shape into an HExpr, rewriting leaf keys to "<prefix><slot>"."""
    order = shape_order(shape)
    slots: Dict[int, int] = {}
    for slot, leaf in enumerate(order, start=1):
        if leaf.key in slots:
            raise HexecExceptionRecordError(record_id, f"#{leaf.key} used twice")
        slots[leaf.key] = slot

    regex = placeholder_regex()

    def rewrite(text: str) -> str:
        def slot_of(m):
            key = match_index(m)
            if key not in slots:
                raise HexecExceptionRecordError(
                    record_id, f"#{key} is not part of the expression"
                )
            return f"{prefix}{slots[key]}"

        return regex.sub(slot_of, text)

    def build(s: Shape) -> HExpr:
        if isinstance(s, ShapeLeaf):
            return Primitive(rewrite(s.text), s.entity_hint)
        return Operation(s.kind, build(s.left), build(s.right))

    return build(shape)
