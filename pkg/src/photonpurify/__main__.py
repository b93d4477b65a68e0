"""Module entry point so python -m photonpurify works like the script."""

from .cli import main

if __name__ == "__main__":
    raise SystemExit(main())
