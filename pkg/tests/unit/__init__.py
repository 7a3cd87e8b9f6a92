"""Unit tests for maneuverml."""
