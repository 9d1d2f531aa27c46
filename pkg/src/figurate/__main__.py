"""Allow `python -m figurate`."""

from figurate.cli import main

if __name__ == "__main__":
    main()
