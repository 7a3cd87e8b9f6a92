# ABOUTME: Configuration package: run configuration records, layering and providers
# ABOUTME: Package defaults live in defaults.yaml next to this module

from .factory import ConfigurationFactory
from .manager import ConfigurationManager
from .models import (
    ConfigurationDict,
    ConfigurationProvider,
    CorpusConfig,
    LoggingConfig,
    PathsConfig,
    RunConfig,
)
from .providers import FileConfigurationProvider, ProfileFileConfigurationProvider

__all__ = [
    "ConfigurationDict",
    "ConfigurationFactory",
    "ConfigurationManager",
    "ConfigurationProvider",
    "CorpusConfig",
    "FileConfigurationProvider",
    "LoggingConfig",
    "PathsConfig",
    "ProfileFileConfigurationProvider",
    "RunConfig",
]
