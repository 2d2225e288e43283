"""Module entry point: python -m hesspave."""

from .cli import main

if __name__ == "__main__":
    main()
