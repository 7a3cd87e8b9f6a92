# ABOUTME: Development profile plugins package
# ABOUTME: Holds the development logging configuration read by the base logging provider
