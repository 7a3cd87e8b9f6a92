# Integration tests for the maneuverml pipeline and CLI
