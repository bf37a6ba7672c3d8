# Copyright (c) 2026 The hexec Authors. All rights reserved.
import logging
import os
import re
from argparse import Namespace
from typing import Dict, List, Optional, Union

from packaging import version
from yaml import safe_load as yaml_safe_load

from hexec.common.config import (
    EMPTY_INTERSECTION_POLICIES,
    READER_KINDS,
    TIE_POLICIES,
    ExecConfig,
    NormalizationOptions,
    ReaderSettings,
    RunConfig,
)
from hexec.common.results import (
    HexecExceptionArgumentsError,
    HexecExceptionConfigError,
)
from hexec.version import MAXIMUM_SUPPORTED_VERSION, MINIMUM_SUPPORTED_VERSION

logger = logging.getLogger("hexec")

# Config-file fields holding paths; relative paths are taken from the config file's directory.
PATH_FIELDS = ["facts", "script", "templates", "trace_dir", "gold"]

# CLI argument -> (section, field). Section None is the RunConfig itself.
ARG_OVERRIDES = {
    "reader": ("reader", "kind"),
    "facts": ("reader", "facts"),
    "script": ("reader", "script"),
    "endpoint": ("reader", "endpoint"),
    "timeout": ("reader", "timeout"),
    "retries": ("reader", "retries"),
    "top_k": ("execution", "top_k"),
    "max_depth": ("execution", "max_depth"),
    "placeholder_a": ("execution", "a_placeholders"),
    "fallback": (None, "fallback"),
    "trace_dir": (None, "trace_dir"),
    "parallel": (None, "parallel"),
    "templates": (None, "templates"),
    "dataset": (None, "dataset"),
    "input": (None, "input"),
    "output": (None, "output"),
    "gold": (None, "gold"),
    "expression": (None, "expression"),
    "facts_out": (None, "facts_out"),
    "host": (None, "host"),
    "port": (None, "port"),
    "prometheus_disabled": (None, "prometheus_disabled"),
}


def check_version(hexec_version: str):
    try:
        v = version.parse(str(hexec_version))
    except version.InvalidVersion as e:
        raise HexecExceptionArgumentsError(
            f"Invalid hexec_version '{hexec_version}'"
        ) from e
    if MINIMUM_SUPPORTED_VERSION and v < version.parse(MINIMUM_SUPPORTED_VERSION):
        raise HexecExceptionArgumentsError(
            f"hexec_version {hexec_version} is below minimum supported version {MINIMUM_SUPPORTED_VERSION}"
        )
    if MAXIMUM_SUPPORTED_VERSION and v > version.parse(MAXIMUM_SUPPORTED_VERSION):
        raise HexecExceptionArgumentsError(
            f"hexec_version {hexec_version} is above maximum supported version {MAXIMUM_SUPPORTED_VERSION}"
        )


class ConfigGenerator:
    """
    ConfigGenerator:
    Loads a YAML run configuration, or takes an already loaded dictionary,
    and builds a RunConfig from it.

    Args:
    config: [str, Dict] Path to a .yaml file if loading from file, else a config dictionary.
    yaml:   [bool] If true, `config` is a path, otherwise a Dict.
    """

    def __init__(self, config: Union[str, Dict], yaml: bool = True) -> None:
        if yaml:
            if not isinstance(config, str):
                raise HexecExceptionConfigError(
                    f"`yaml` set to True when loading config, expected a path to a YAML file. Got {type(config)}."
                )
            try:
                with open(config) as f:
                    config_dict = yaml_safe_load(f)
            except Exception as e:
                raise HexecExceptionConfigError(f"Failure loading {config}.") from e
            if config_dict is None:
                config_dict = {}
            config_file = config
        else:
            config_dict = config
            config_file = None

        if not isinstance(config_dict, dict):
            raise HexecExceptionConfigError(
                f"Invalid config: expected a mapping at the top level, got {type(config_dict).__name__}"
            )

        self.config_dict = config_dict
        self.config_file = config_file

    def load(self, args: Namespace = None) -> RunConfig:
        """
        ConfigGenerator.load():

        Returns a RunConfig with config-file values over dataclass defaults,
        then any CLI argument that was given (not None) over both.
        """
        config = RunConfig()
        config.hexec_version = str(self.__setter("hexec_version", config.hexec_version))
        config.config_file = self.config_file
        config.args = args

        config.reader = self.init_reader_settings()
        config.execution = self.init_exec_config()

        for key in [
            "fallback",
            "trace_dir",
            "parallel",
            "templates",
            "dataset",
            "input",
            "output",
            "gold",
            "expression",
            "facts_out",
            "host",
            "port",
            "prometheus_disabled",
        ]:
            value = self.__setter(key, getattr(config, key))
            if key in PATH_FIELDS:
                value = self.__resolve_path(value)
            setattr(config, key, value)

        if args is not None:
            self.apply_args(config, args)

        self.validate(config)
        return config

    def init_reader_settings(self) -> ReaderSettings:
        reader = ReaderSettings()
        level = ["reader"]
        reader.kind = self.__setter("kind", reader.kind, level)
        reader.facts = self.__resolve_path(self.__setter("facts", reader.facts, level))
        reader.script = self.__resolve_path(self.__setter("script", reader.script, level))
        reader.endpoint = self.__setter("endpoint", reader.endpoint, level)
        reader.timeout = float(self.__setter("timeout", reader.timeout, level))
        reader.retries = int(self.__setter("retries", reader.retries, level))
        reader.backoff_factor = float(
            self.__setter("backoff_factor", reader.backoff_factor, level)
        )
        return reader

    def init_exec_config(self) -> ExecConfig:
        defaults = ExecConfig()
        level = ["execution"]
        fields = {}
        for key in [
            "top_k",
            "date_formats",
            "tie_policy",
            "empty_intersection_policy",
            "entity_heads",
            "placeholder_pattern",
            "a_placeholders",
            "max_depth",
        ]:
            fields[key] = self.__setter(key, getattr(defaults, key), level)

        normalization = self.__setter("normalization", None, level)
        if normalization is not None:
            try:
                fields["normalization"] = NormalizationOptions(**normalization)
            except TypeError as e:
                raise HexecExceptionConfigError(
                    f"Invalid execution.normalization: {e}"
                ) from e

        try:
            return ExecConfig(**fields)
        except ValueError as e:
            raise HexecExceptionConfigError(f"Invalid execution config: {e}") from e

    def apply_args(self, config: RunConfig, args: Namespace):
        for arg, (section, field) in ARG_OVERRIDES.items():
            value = getattr(args, arg, None)
            if value is None:
                continue
            target = getattr(config, section) if section else config
            logger.debug(f"Argument --{arg.replace('_', '-')} sets {field}={value!r}")
            setattr(target, field, value)

    def validate(self, config: RunConfig):
        if config.reader.kind not in READER_KINDS:
            raise HexecExceptionConfigError(
                f"Unknown reader '{config.reader.kind}', expected one of {READER_KINDS}"
            )
        execution = config.execution
        if execution.top_k < 1:
            raise HexecExceptionConfigError(
                f"top_k must be >= 1, got {execution.top_k}"
            )
        if execution.tie_policy not in TIE_POLICIES:
            raise HexecExceptionConfigError(
                f"Unknown tie_policy '{execution.tie_policy}', expected one of {TIE_POLICIES}"
            )
        if execution.empty_intersection_policy not in EMPTY_INTERSECTION_POLICIES:
            raise HexecExceptionConfigError(
                f"Unknown empty_intersection_policy '{execution.empty_intersection_policy}', "
                f"expected one of {EMPTY_INTERSECTION_POLICIES}"
            )
        if execution.placeholder_pattern is not None:
            try:
                compiled = re.compile(execution.placeholder_pattern)
            except re.error as e:
                raise HexecExceptionConfigError(
                    f"Invalid placeholder_pattern: {e}"
                ) from e
            if "index" not in compiled.groupindex:
                raise HexecExceptionConfigError(
                    "placeholder_pattern must define a named group 'index'"
                )
        if config.fallback < 1:
            raise HexecExceptionConfigError(
                f"fallback must be >= 1, got {config.fallback}"
            )

    def __resolve_path(self, path: Optional[str]) -> Optional[str]:
        if path is None or self.config_file is None or os.path.isabs(path):
            return path
        return os.path.join(os.path.dirname(os.path.abspath(self.config_file)), path)

    def __setter(self, key: str, var=None, level: List[str] = None):
        d = self.config_dict
        level = level or []
        for i in level:
            d = d.get(i) or {}
            if not isinstance(d, dict):
                raise HexecExceptionConfigError(
                    f"Invalid config: '{i}' must be a mapping"
                )

        if key not in d:
            # Without a config file every field is a default; keep that quiet.
            log = logger.info if self.config_file else logger.debug
            log(f"{'.'.join(level + [key])} not specified. Defaulting to '{var}'")
            return var
        return d[key]
