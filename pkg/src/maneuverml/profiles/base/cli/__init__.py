# ABOUTME: Base profile CLI command registrations
# ABOUTME: Each module registers one CLI plugin object
