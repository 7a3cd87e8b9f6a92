# ABOUTME: maneuverml: maneuver labelling and binary classification of trajectories
# ABOUTME: Library entry points live in the subpackages; the CLI lives in cli.py

__version__ = "0.1.0"
