# ABOUTME: Production profile plugins package
# ABOUTME: Holds the production logging configuration read by the base logging provider
