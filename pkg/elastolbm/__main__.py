"""
elastolbm package CLI entry point.
Run: python -m elastolbm <command>
"""
from .cli import main


if __name__ == "__main__":
    main()
