# ABOUTME: Plugin profiles for different execution contexts
# ABOUTME: The base profile is always loaded; one named profile adds to it
