import os
from collections.abc import Callable
from typing import Any, Hashable

import yaml

from leonard_trio_lab.algebra.params import ParamKind, ParamSet
from leonard_trio_lab.errors import ConfigError
from leonard_trio_lab.exact.rational import Rational, to_rational
from leonard_trio_lab.report.sweep import SweepConfig

Config = ParamSet | SweepConfig


def _build_kwargs(
    data: dict[Hashable, Any], default_kwargs: dict[str, Any]
) -> dict[str, Any]:
    """
    Build kwargs by merging data with default values and validating keys.

    :param data: Input data from YAML
    :param default_kwargs: Default values for all allowed keys
    :return: Merged kwargs dictionary
    :raises ConfigError: If unexpected keys are found in data
    """
    unexpected_keys = set(data.keys()) - set(default_kwargs.keys())
    if unexpected_keys:
        raise ConfigError(
            f"Unexpected keys: {', '.join(sorted(map(str, unexpected_keys)))}. "
            f"Allowed keys: {', '.join(default_kwargs.keys())}"
        )

    kwargs = default_kwargs.copy()
    for key, value in data.items():
        kwargs[str(key)] = value
    return kwargs


def _rational(key: str, value: Any) -> Rational | None:
    """
    Convert a rational field; YAML floats are rejected.
    """
    if value is None:
        return None
    if isinstance(value, float):
        raise ConfigError(f"Field '{key}' must be 'p/q' or an integer, got {value}")
    try:
        return to_rational(value)
    except ValueError as e:
        raise ConfigError(f"Field '{key}': {e}") from e


def _natural(key: str, value: Any) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise ConfigError(f"Field '{key}' must be a natural number, got {value!r}")
    return value


def _params_constructor(
    kind: ParamKind,
) -> Callable[[yaml.FullLoader, yaml.MappingNode], ParamSet]:
    """
    Constructor of the parameter set tag of one kind; the allowed keys are
    "n", "a" and the optional fields the kind takes.
    """
    fields = {
        ParamKind.STANDARD: ("c", "rho"),
        ParamKind.GENERAL: ("b", "c", "rho"),
        ParamKind.JACOBI: ("b",),
    }[kind]

    def construct(loader: yaml.FullLoader, node: yaml.MappingNode) -> ParamSet:
        data = loader.construct_mapping(node)
        default_kwargs: dict[str, Any] = {"n": None, "a": None}
        default_kwargs.update({name: None for name in fields})
        kwargs = _build_kwargs(data, default_kwargs)
        a = _rational("a", kwargs["a"])
        if kwargs["n"] is None or a is None:
            raise ConfigError(f"{kind.value} parameters need 'n' and 'a'")
        try:
            return ParamSet(
                kind,
                _natural("n", kwargs["n"]),
                a,
                b=_rational("b", kwargs.get("b")),
                c=_rational("c", kwargs.get("c")),
                rho=_rational("rho", kwargs.get("rho")),
            )
        except ValueError as e:
            raise ConfigError(str(e)) from e

    return construct


def _get_sweep_config(loader: yaml.FullLoader, node: yaml.MappingNode) -> SweepConfig:
    """
    Construct a sweep configuration from a yaml node.
    :param loader: The yaml loader.
    :param node: The yaml node.
    :return: The constructed sweep configuration.
    """
    data = loader.construct_mapping(node)
    defaults = SweepConfig()
    default_kwargs: dict[str, Any] = {
        "kind": defaults.kind.value,
        "n_min": defaults.n_min,
        "n_max": defaults.n_max,
        "samples": defaults.samples,
        "seed": defaults.seed,
        "jobs": defaults.jobs,
    }
    kwargs = _build_kwargs(data, default_kwargs)
    try:
        kind = ParamKind(kwargs.pop("kind"))
    except ValueError as e:
        raise ConfigError(str(e)) from e
    numbers = {key: _natural(key, value) for key, value in kwargs.items()}
    try:
        return SweepConfig(kind=kind, **numbers)
    except ValueError as e:
        raise ConfigError(str(e)) from e


def _register_yaml_constructors() -> None:
    """Register the YAML constructors of the configuration tags."""
    constructors: dict[str, Callable[[yaml.FullLoader, yaml.MappingNode], Any]] = {
        "StandardParams": _params_constructor(ParamKind.STANDARD),
        "GeneralParams": _params_constructor(ParamKind.GENERAL),
        "JacobiParams": _params_constructor(ParamKind.JACOBI),
        "SweepConfig": _get_sweep_config,
    }
    for tag, constructor in constructors.items():
        yaml.FullLoader.add_constructor(f"tag:yaml.org,2002:{tag}", constructor)


_register_yaml_constructors()


class ConfigBuilder:
    """
    A class to build parameter sets and sweep configurations from yaml files.
    """

    def __init__(self) -> None:
        self.cache: dict[str, Config] = {}

    def from_string(self, config_string: str) -> Config:
        """
        Create a configuration from a YAML string.

        :param config_string: A single tagged YAML document.
        :return: The parameter set or sweep configuration.
        :raises ConfigError: If the document is malformed or untagged.
        """
        try:
            data = yaml.load(config_string, Loader=yaml.FullLoader)
        except yaml.YAMLError as e:
            raise ConfigError(f"Invalid YAML: {e}") from e
        if not isinstance(data, ParamSet | SweepConfig):
            raise ConfigError(
                "Expected a !!StandardParams, !!GeneralParams, !!JacobiParams "
                "or !!SweepConfig document"
            )
        return data

    def _load_config(self, config_path: str) -> Config:
        try:
            with open(config_path) as file:
                return self.from_string(file.read())
        except OSError as e:
            raise ConfigError(f"Cannot read {config_path}: {e}") from e

    def get_config(self, config_path: str) -> Config:
        """
        Get a configuration from a yaml file, cached by absolute path.
        :param config_path: The path to the yaml file.
        :return: The configuration.
        """
        full_path = os.path.abspath(config_path)

        if full_path not in self.cache:
            self.cache[full_path] = self._load_config(full_path)

        return self.cache[full_path]

    def get_params(self, config_path: str) -> ParamSet:
        """
        :raises ConfigError: If the file holds a sweep configuration.
        """
        config = self.get_config(config_path)
        if not isinstance(config, ParamSet):
            raise ConfigError(f"{config_path} does not hold a parameter set")
        return config

    def get_sweep(self, config_path: str) -> SweepConfig:
        """
        :raises ConfigError: If the file holds a parameter set.
        """
        config = self.get_config(config_path)
        if not isinstance(config, SweepConfig):
            raise ConfigError(f"{config_path} does not hold a sweep configuration")
        return config
