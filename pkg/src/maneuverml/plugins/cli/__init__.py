# ABOUTME: CLI plugin package for the pipeline commands
# ABOUTME: Provides synth, build-dataset, train, evaluate, validate and config show

from .config_commands import ConfigCliPlugin
from .dataset_commands import DatasetCliPlugin
from .model_commands import ModelCliPlugin
from .synth_commands import SynthCliPlugin
from .validate_commands import ValidateCliPlugin

__all__ = [
    "ConfigCliPlugin",
    "DatasetCliPlugin",
    "ModelCliPlugin",
    "SynthCliPlugin",
    "ValidateCliPlugin",
]
