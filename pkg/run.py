import sys

from plumb.cli import main

if "__main__" == __name__:
    sys.exit(main())
