import os

import yaml

from leonard_trio_lab.algebra.params import ParamKind, ParamSet
from leonard_trio_lab.exact.rational import Rational, format_rational
from leonard_trio_lab.report.sweep import SweepConfig

_PARAM_TAGS = {
    ParamKind.STANDARD: "tag:yaml.org,2002:StandardParams",
    ParamKind.GENERAL: "tag:yaml.org,2002:GeneralParams",
    ParamKind.JACOBI: "tag:yaml.org,2002:JacobiParams",
}


def _rational_value(value: Rational) -> int | str:
    """
    Integers stay YAML integers; other rationals become "p/q" strings.
    """
    if value.denominator == 1:
        return value.numerator
    return format_rational(value)


def _param_set_representer(
    dumper: yaml.Dumper, params: ParamSet
) -> yaml.nodes.MappingNode:
    """
    Represent a ParamSet as a YAML mapping node tagged with its kind.
    :param dumper: The YAML dumper instance.
    :param params: The ParamSet instance to represent.
    :return: A YAML mapping node representing the ParamSet.
    """
    mapping: dict[str, int | str] = {"n": params.n}
    for name in ("a", "b", "c", "rho"):
        value = getattr(params, name)
        if value is not None:
            mapping[name] = _rational_value(value)
    return dumper.represent_mapping(_PARAM_TAGS[params.kind], mapping)


def _sweep_config_representer(
    dumper: yaml.Dumper, cfg: SweepConfig
) -> yaml.nodes.MappingNode:
    return dumper.represent_mapping(
        "tag:yaml.org,2002:SweepConfig",
        {
            "kind": cfg.kind.value,
            "n_min": cfg.n_min,
            "n_max": cfg.n_max,
            "samples": cfg.samples,
            "seed": cfg.seed,
            "jobs": cfg.jobs,
        },
    )


yaml.add_representer(ParamSet, _param_set_representer)
yaml.add_representer(SweepConfig, _sweep_config_representer)


class ConfigDumper:
    """
    A class to dump a parameter set or sweep configuration to YAML.

    :ivar config: The configuration to dump.
    """

    def __init__(self, config: ParamSet | SweepConfig) -> None:
        self.config = config

    def dump(self) -> str:
        """
        Dump the configuration to a YAML string.

        :return: The tagged YAML document.
        """
        config_str = yaml.dump(self.config, sort_keys=False)
        assert isinstance(config_str, str)
        return config_str

    def dumps(self, file_path: str) -> None:
        """
        Dump the configuration to a YAML file.

        :param file_path: The path to the YAML file.
        """
        base_dir = os.path.dirname(file_path)
        if base_dir:
            os.makedirs(base_dir, exist_ok=True)

        with open(file_path, "w") as file:
            file.write(self.dump())
