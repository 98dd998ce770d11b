import sys

from falsilab.main import main

if __name__ == "__main__":
    sys.exit(main())
