from .config_builder import Config, ConfigBuilder
from .config_dumper import ConfigDumper

__all__ = ["Config", "ConfigBuilder", "ConfigDumper"]
