import os
from fractions import Fraction
from pathlib import Path

import pytest

from leonard_trio_lab.algebra.params import ParamKind, ParamSet
from leonard_trio_lab.builder import ConfigBuilder, ConfigDumper
from leonard_trio_lab.errors import ConfigError
from leonard_trio_lab.report.sweep import SweepConfig
from tests import gen_generic_params

TEMPLATE_DIR = os.path.join(
    os.path.dirname(os.path.abspath(__file__)), "../../template"
)


def template_path(name: str) -> str:
    return os.path.join(TEMPLATE_DIR, name)


@pytest.mark.parametrize(
    "config",
    [
        gen_generic_params(ParamKind.STANDARD),
        gen_generic_params(ParamKind.STANDARD, with_rho=False),
        gen_generic_params(ParamKind.GENERAL),
        gen_generic_params(ParamKind.JACOBI),
        ParamSet(ParamKind.STANDARD, 3, Fraction(2), c=Fraction(-1)),
        SweepConfig(kind=ParamKind.GENERAL, n_min=0, n_max=3, samples=2, seed=9),
    ],
)
class TestConfigDumper:
    def test_dump(self, config: ParamSet | SweepConfig) -> None:
        dumper = ConfigDumper(config)
        builder = ConfigBuilder()

        yaml = dumper.dump()
        assert yaml.startswith("!!")

        assert builder.from_string(yaml) == config

    def test_dumps(self, config: ParamSet | SweepConfig, tmp_path: Path) -> None:
        path = tmp_path / "configs" / "config.yml"
        ConfigDumper(config).dumps(str(path))
        assert ConfigBuilder().get_config(str(path)) == config


class TestConfigBuilder:
    def test_standard_template(self) -> None:
        params = ConfigBuilder().get_params(template_path("standard_params.yml"))
        assert params == ParamSet(
            ParamKind.STANDARD,
            8,
            Fraction(1, 3),
            c=Fraction(1, 5),
            rho=Fraction(2, 7),
        )

    @pytest.mark.parametrize(
        "name, kind",
        [
            ("general_params.yml", ParamKind.GENERAL),
            ("jacobi_params.yml", ParamKind.JACOBI),
        ],
    )
    def test_templates(self, name: str, kind: ParamKind) -> None:
        assert ConfigBuilder().get_params(template_path(name)).kind == kind

    def test_sweep_template(self) -> None:
        cfg = ConfigBuilder().get_sweep(template_path("sweep.yml"))
        assert cfg.seed == 42
        assert cfg.kind == ParamKind.STANDARD

    def test_cache(self) -> None:
        builder = ConfigBuilder()
        first = builder.get_config(template_path("standard_params.yml"))
        assert builder.get_config(template_path("standard_params.yml")) is first
        assert len(builder.cache) == 1

    def test_sweep_defaults(self) -> None:
        cfg = ConfigBuilder().from_string("!!SweepConfig\nseed: 3\n")
        assert cfg == SweepConfig(seed=3)

    @pytest.mark.parametrize(
        "document",
        [
            "!!StandardParams\nn: 3\na: 0.5\nc: 1/5\n",
            "!!StandardParams\nn: 3\na: 1/3\nc: 1/5\nb: 1\n",
            "!!StandardParams\nn: 3\na: 1/3\n",
            "!!StandardParams\nn: -1\na: 1/3\nc: 1/5\n",
            "!!JacobiParams\nn: 3\na: 1/3\n",
            "!!JacobiParams\nn: 3\na: 1/3\nb: 1/0\n",
            "!!SweepConfig\nkind: hermite\n",
            "!!SweepConfig\nn_min: 4\nn_max: 2\n",
            "n: 3\na: 1/3\n",
            "!!StandardParams\nn: [3\n",
        ],
    )
    def test_invalid(self, document: str) -> None:
        with pytest.raises(ConfigError):
            ConfigBuilder().from_string(document)

    def test_wrong_document_kind(self) -> None:
        with pytest.raises(ConfigError):
            ConfigBuilder().get_sweep(template_path("standard_params.yml"))
        with pytest.raises(ConfigError):
            ConfigBuilder().get_params(template_path("sweep.yml"))

    def test_missing_file(self, tmp_path: Path) -> None:
        with pytest.raises(ConfigError):
            ConfigBuilder().get_config(str(tmp_path / "absent.yml"))
