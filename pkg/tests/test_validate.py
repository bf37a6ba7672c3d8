# Copyright (c) 2026 The hexec Authors. All rights reserved.
import random

import pytest
from utils import FA_CUP_EXPRESSION, numbered_leaves, random_tree

from hexec.hexpr.grammar import parse_hexpression, serialize
from hexec.hexpr.nodes import (
    Operation,
    Primitive,
    depth,
    execution_order,
    first_executed_primitive,
    iter_nodes,
    node_at,
)
from hexec.hexpr.placeholders import find_placeholders, placeholder_regex
from hexec.hexpr.validate import (
    DEPTH_EXCEEDED,
    JOIN_WITHOUT_PLACEHOLDER,
    UNRESOLVABLE_PLACEHOLDER,
    Severity,
    validate,
)


@pytest.mark.fast
def test_find_placeholders():
    examples = [
        {"text": "When was the last time Ans#2 beat Ans#1", "indices": [2, 1]},
        {"text": "Where is #1's place of birth?", "indices": [1]},
        {"text": "Who followed Ans#10?", "indices": [10]},
        {"text": "Issue #0 is not a slot", "indices": []},
        {"text": "Channel ##1", "indices": []},
        {"text": "Who is A1?", "indices": []},
        {"text": "No placeholders here", "indices": []},
    ]
    for e in examples:
        refs = find_placeholders(e["text"])
        assert [r.index for r in refs] == e["indices"], e


@pytest.mark.fast
def test_find_placeholders_surface_forms():
    refs = find_placeholders("Ans#2 beat #1")
    assert [r.surface_form for r in refs] == ["Ans#2", "#1"]
    assert [(r.start, r.end) for r in refs] == [(0, 5), (11, 13)]


@pytest.mark.fast
def test_a_placeholders():
    regex = placeholder_regex(a_placeholders=True)
    assert [r.index for r in find_placeholders("Where was A1 born, after Ans#2?", regex)] == [1, 2]
    assert [r.index for r in find_placeholders("Who is A1's father?", regex)] == [1]
    # Words that merely start with A are untouched.
    assert find_placeholders("Flight BA1 and A1B", regex) == []


@pytest.mark.fast
def test_custom_placeholder_pattern():
    regex = placeholder_regex(r"@(?P<index>\d+)")
    assert [r.index for r in find_placeholders("Where was @1 born?", regex)] == [1]
    assert find_placeholders("Where was Ans#1 born?", regex) == []


@pytest.mark.fast
def test_execution_order():
    expr = parse_hexpression(FA_CUP_EXPRESSION)
    order = execution_order(expr)
    assert [leaf.path for leaf in order] == ["$.R.R", "$.R.L", "$.L"]
    assert order[0].primitive == Primitive("who is winner of 1894-95 FA Cup")
    assert node_at(expr, "$.R.L") == Primitive("what is member of sports team of Duane Courtney")
    assert first_executed_primitive(expr) == order[0].primitive
    assert depth(expr) == 3
    assert depth(Primitive("x")) == 1
    with pytest.raises(KeyError):
        node_at(expr, "$.L.L")


@pytest.mark.fast
def test_validate_fa_cup():
    report = validate(parse_hexpression(FA_CUP_EXPRESSION))
    assert report.executable
    assert report.diagnostics == []


@pytest.mark.fast
def test_validate_unresolvable():
    examples = [
        {"text": "JOIN[ Who is Ans#2?, Who is x? ]", "paths": ["$.L"]},
        {"text": "Who is Ans#1?", "paths": ["$"]},
        # The left operand of the UNION runs second, so it may read slot 1 only.
        {"text": "JOIN[ a Ans#2, UNION[ b Ans#2, c ] ]", "paths": ["$.R.L"]},
        {"text": "JOIN[ Ans#3, JOIN[ Ans#1, c ] ]", "paths": ["$.L"]},
    ]
    for e in examples:
        report = validate(parse_hexpression(e["text"]))
        assert not report.executable, e
        assert [d.code for d in report.errors] == [UNRESOLVABLE_PLACEHOLDER] * len(e["paths"]), e
        assert [d.node_path for d in report.errors] == e["paths"], e


@pytest.mark.fast
def test_validate_join_without_placeholder():
    report = validate(parse_hexpression("JOIN[ Who is y?, Who is x? ]"))
    assert report.executable
    assert report.errors == []
    assert [(d.code, d.node_path, d.severity) for d in report.warnings] == [
        (JOIN_WITHOUT_PLACEHOLDER, "$", Severity.WARNING)
    ]
    assert report.to_dict()["diagnostics"][0]["severity"] == "WARNING"


@pytest.mark.fast
def test_validate_depth():
    text = "a"
    for i in range(4):
        text = f"UNION[ q{i}, {text} ]"
    expr = parse_hexpression(text)
    assert depth(expr) == 5
    assert validate(expr, max_depth=5).executable
    report = validate(expr, max_depth=4)
    assert not report.executable
    assert [d.code for d in report.errors] == [DEPTH_EXCEEDED]


@pytest.mark.fast
def test_validate_custom_pattern():
    regex = placeholder_regex(r"@(?P<index>\d+)")
    assert validate(parse_hexpression("JOIN[ Where was @1 born?, Who wrote Hamlet? ]"), regex=regex).executable
    report = validate(parse_hexpression("JOIN[ Where was @2 born?, Who wrote Hamlet? ]"), regex=regex)
    assert not report.executable


def _leaf_paths_under(order, path):
    return [i for i, leaf in enumerate(order) if leaf.path == path or leaf.path.startswith(path + ".")]


@pytest.mark.fast
def test_execution_order_random_trees():
    rng = random.Random(11)
    for _ in range(500):
        tree = random_tree(rng, rng.randint(1, 7), numbered_leaves())
        order = execution_order(tree)
        leaf_paths = [path for path, node in iter_nodes(tree) if isinstance(node, Primitive)]
        assert sorted(leaf.path for leaf in order) == sorted(leaf_paths)
        assert len({leaf.path for leaf in order}) == len(order)

        for path, node in iter_nodes(tree):
            if isinstance(node, Operation):
                right = _leaf_paths_under(order, path + ".R")
                left = _leaf_paths_under(order, path + ".L")
                assert right and left
                # The whole right subtree runs before any of the left subtree.
                assert max(right) < min(left), (serialize(tree), path)


def _leaf_with_references(rng: random.Random) -> Primitive:
    refs = [f"Ans#{rng.randint(1, 8)}" for _ in range(rng.randint(0, 2))]
    return Primitive(" ".join(["what is"] + refs))


@pytest.mark.fast
def test_executable_iff_references_point_back():
    rng = random.Random(12)
    seen = {True: 0, False: 0}
    for _ in range(1000):
        tree = random_tree(rng, rng.randint(1, 5), _leaf_with_references)
        bad_paths = [
            leaf.path
            for position, leaf in enumerate(execution_order(tree), start=1)
            if any(ref.index >= position for ref in find_placeholders(leaf.primitive.text))
        ]
        report = validate(tree)
        assert report.executable == (not bad_paths), serialize(tree)
        reported = {d.node_path for d in report.errors if d.code == UNRESOLVABLE_PLACEHOLDER}
        assert reported == set(bad_paths)
        seen[report.executable] += 1
    assert seen[True] and seen[False]
