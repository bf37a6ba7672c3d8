# Copyright (c) 2026 The hexec Authors. All rights reserved.
from typing import List, Optional, Tuple, Union

from hexec.builder.musique import build_from_musique, musique_closed_loop_facts
from hexec.builder.records import MusiqueRecord, TwoWikiRecord
from hexec.builder.templates import TemplateTable
from hexec.builder.twowiki import build_from_2wiki, twowiki_closed_loop_facts
from hexec.hexpr.nodes import HExpr
from hexec.hexpr.validate import Diagnostic

Record = Union[MusiqueRecord, TwoWikiRecord]


def build_record(
    record: Record,
    templates: TemplateTable = None,
    diagnostics: Optional[List[Diagnostic]] = None,
) -> HExpr:
    if isinstance(record, MusiqueRecord):
        return build_from_musique(record, templates)
    return build_from_2wiki(record, templates, diagnostics)


def closed_loop_facts(record: Record, templates: TemplateTable = None) -> List[Tuple[str, str]]:
    """Oracle facts implied by the record's own annotations."""
    if isinstance(record, MusiqueRecord):
        return musique_closed_loop_facts(record, templates)
    return twowiki_closed_loop_facts(record, templates)
