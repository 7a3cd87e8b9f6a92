# ABOUTME: This package contains the plugin system for maneuverml
# ABOUTME: It includes the hook specifications, the registry and the CLI plugins
