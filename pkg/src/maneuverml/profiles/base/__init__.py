# ABOUTME: Base profile - built-in classifiers, default configuration and CLI commands
# ABOUTME: Shared by every profile
