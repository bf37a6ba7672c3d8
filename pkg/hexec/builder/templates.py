# Copyright (c) 2026 The hexec Authors. All rights reserved.
import logging
from typing import Dict, Mapping, Optional

from yaml import safe_load as yaml_safe_load

from hexec.common.results import HexecExceptionConfigError

logger = logging.getLogger("hexec")

SUBJECT_SLOT = "{subject}"
RELATION_SLOT = "{relation}"
DEFAULT_TEMPLATE = "What is {relation} of {subject}?"

# Relations seen in the bundled datasets' evidence and decompositions.
BUILTIN_TEMPLATES = {
    "country": "What is country of {subject}?",
    "country of citizenship": "What is country of citizenship of {subject}?",
    "country of origin": "What is country of origin of {subject}?",
    "place of birth": "Where is {subject}'s place of birth?",
    "place of death": "Where is {subject}'s place of death?",
    "date of birth": "When is date of birth of {subject}?",
    "date of death": "When is date of death of {subject}?",
    "publication date": "What is publication date of {subject}?",
    "director": "Who is director of {subject}?",
    "creator": "Who is creator of {subject}?",
    "founded by": "{subject} is founded by Who?",
    "named after": "{subject} is named after What?",
    "followed by": "{subject} is followed by What?",
    "spouse": "Who is spouse of {subject}?",
    "sibling": "Who is sibling of {subject}?",
    "father": "Who is father of {subject}?",
    "mother": "Who is mother of {subject}?",
    "member of sports team": "What is member of sports team of {subject}?",
    "residence": "What is residence of {subject}?",
}


def relation_key(relation: str) -> str:
    return " ".join(relation.replace("_", " ").lower().split())


def check_template(relation: str, template: str):
    if not isinstance(template, str) or template.count(SUBJECT_SLOT) != 1:
        raise HexecExceptionConfigError(
            f"Template for '{relation}' must contain exactly one {SUBJECT_SLOT}: {template!r}"
        )


class TemplateTable:
    """
    Relation -> question template with one "{subject}" slot.

    Relations are matched ignoring case, extra spaces and underscores;
    unknown relations use the default template, which may also name the
    relation through "{relation}".
    """

    def __init__(
        self,
        templates: Optional[Mapping[str, str]] = None,
        default: str = DEFAULT_TEMPLATE,
        include_builtin: bool = True,
    ):
        check_template("default", default)
        self.default = default
        self._templates: Dict[str, str] = {}
        if include_builtin:
            self._templates.update(BUILTIN_TEMPLATES)
        for relation, template in (templates or {}).items():
            check_template(relation, template)
            self._templates[relation_key(relation)] = template

    def __contains__(self, relation: str) -> bool:
        return relation_key(relation) in self._templates

    def __len__(self) -> int:
        return len(self._templates)

    def question(self, subject: str, relation: str) -> str:
        template = self._templates.get(relation_key(relation))
        if template is None:
            # The relation is written as given, e.g. "What is unseen_relation of X?".
            template = self.default.replace(RELATION_SLOT, relation.strip())
        return template.replace(SUBJECT_SLOT, subject.strip())

    @classmethod
    def load(cls, path: str) -> "TemplateTable":
        """
        YAML with an optional `default` template and a `templates` mapping,
        or a bare relation -> template mapping. Built-in templates stay
        unless `include_builtin: false`.
        """
        try:
            with open(path) as f:
                d = yaml_safe_load(f) or {}
        except Exception as e:
            raise HexecExceptionConfigError(f"Failure loading {path}.") from e
        if not isinstance(d, dict):
            raise HexecExceptionConfigError(f"{path}: expected a mapping")

        if "templates" in d:
            templates = d["templates"] or {}
            default = d.get("default", DEFAULT_TEMPLATE)
            include_builtin = bool(d.get("include_builtin", True))
        else:
            templates, default, include_builtin = d, DEFAULT_TEMPLATE, True
        if not isinstance(templates, dict):
            raise HexecExceptionConfigError(f"{path}: 'templates' must be a mapping")

        table = cls(templates, default=default, include_builtin=include_builtin)
        logger.info(f"Loaded {len(templates)} templates from {path}")
        return table


_DEFAULT_TABLE = None


def default_table() -> TemplateTable:
    global _DEFAULT_TABLE
    if _DEFAULT_TABLE is None:
        _DEFAULT_TABLE = TemplateTable()
    return _DEFAULT_TABLE


def template_question(
    subject: str, relation: str, templates: TemplateTable = None
) -> str:
    return (templates or default_table()).question(subject, relation)
