import sys

from susp5.cli import main

if __name__ == "__main__":
    sys.exit(main())
