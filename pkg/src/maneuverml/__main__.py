# ABOUTME: Entry point for running maneuverml as a module
# ABOUTME: Allows running "python -m maneuverml" to start the CLI

from maneuverml.cli import main

if __name__ == "__main__":
    main()
