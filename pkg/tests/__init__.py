"""Test suite for maneuverml."""
