# Copyright (c) 2026 The hexec Authors. All rights reserved.
# NOTE:
# Do not import external packages in common modules.
# Only import hexec modules that are also in common.

import os
from argparse import Namespace
from dataclasses import dataclass, field
from typing import List, Optional

READER_KINDS = ["oracle", "remote", "fixture"]
TIE_POLICIES = ["right", "left"]
EMPTY_INTERSECTION_POLICIES = ["empty", "left_top"]

# strptime patterns, tried in order:
#  "D Month YYYY", "Month D, YYYY", "Month YYYY", "YYYY-MM-DD", "YYYY"
DEFAULT_DATE_FORMATS = ["%d %B %Y", "%B %d, %Y", "%B %Y", "%Y-%m-%d", "%Y"]

# Heads of the templated single-hop questions, matched before the
# generic "last ' of '" rule when extracting a main entity.
# Longer heads must precede heads they contain.
DEFAULT_ENTITY_HEADS = [
    "date of birth of",
    "date of death of",
    "publication date of",
    "country of citizenship of",
    "country of origin of",
    "country of",
    "place of birth of",
    "place of death of",
    "member of sports team of",
    "director of",
]


@dataclass
class NormalizationOptions:
    lowercase: bool = True
    strip_punctuation: bool = True
    strip_articles: bool = True
    collapse_whitespace: bool = True


@dataclass
class ExecConfig:
    # Reader candidates requested per primitive.
    top_k: int = 5
    date_formats: List[str] = field(default_factory=lambda: list(DEFAULT_DATE_FORMATS))
    normalization: NormalizationOptions = field(default_factory=NormalizationOptions)
    tie_policy: str = "right"
    empty_intersection_policy: str = "empty"
    entity_heads: List[str] = field(
        default_factory=lambda: list(DEFAULT_ENTITY_HEADS)
    )
    # Custom placeholder regex; must define a named group "index".
    placeholder_pattern: Optional[str] = None
    # Also recognise "A1" style placeholders.
    a_placeholders: bool = False
    max_depth: int = 16

    def __post_init__(self):
        if self.top_k < 1:
            raise ValueError(f"top_k must be >= 1, got {self.top_k}")


@dataclass
class ReaderSettings:
    kind: str = "oracle"
    facts: Optional[str] = None
    script: Optional[str] = None
    endpoint: Optional[str] = None
    timeout: float = 30.0
    retries: int = 2
    backoff_factor: float = 0.5


@dataclass
class RunConfig:
    hexec_version: str = "1.0.0"
    config_file: Optional[str] = None
    command: Optional[str] = None
    reader: ReaderSettings = field(default_factory=ReaderSettings)
    execution: ExecConfig = field(default_factory=ExecConfig)
    # Maximum number of candidate expressions tried per item.
    fallback: int = 10
    trace_dir: Optional[str] = None
    parallel: int = field(default_factory=lambda: os.cpu_count() or 1)
    templates: Optional[str] = None
    dataset: Optional[str] = None
    input: Optional[str] = None
    output: Optional[str] = None
    gold: Optional[str] = None
    expression: Optional[str] = None
    facts_out: Optional[str] = None
    host: str = "0.0.0.0"
    port: int = 8100
    prometheus_disabled: bool = False
    args: Namespace = None

