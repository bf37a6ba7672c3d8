# Copyright (c) 2026 The hexec Authors. All rights reserved.
from hexec.hexpr.grammar import escape_primitive, parse_hexpression, serialize
from hexec.hexpr.nodes import (
    ROOT_PATH,
    HExpr,
    LeafRef,
    Operation,
    OpKind,
    Primitive,
    depth,
    execution_order,
    first_executed_primitive,
    iter_nodes,
    lookup_op,
    node_at,
)
from hexec.hexpr.placeholders import (
    PlaceholderRef,
    find_placeholders,
    placeholder_regex,
)
from hexec.hexpr.validate import (
    Diagnostic,
    Severity,
    ValidationReport,
    validate,
)
