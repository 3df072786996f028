"""Allow running diagctl as a module: python -m diagctl."""

from diagctl.cli import cli

if __name__ == "__main__":
    cli()
