import sys

from restricted_iso.main import main


if __name__ == '__main__':
    sys.exit(main())
