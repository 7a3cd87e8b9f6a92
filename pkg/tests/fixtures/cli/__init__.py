# ABOUTME: CLI-related test fixtures and example plugins
# ABOUTME: Contains example CLI extension plugins for testing the CLI extension point
