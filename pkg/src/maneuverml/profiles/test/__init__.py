# ABOUTME: Test profile plugins package
# ABOUTME: Holds the test logging configuration read by the base logging provider
