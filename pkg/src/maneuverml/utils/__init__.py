"""Utility modules for maneuverml."""
