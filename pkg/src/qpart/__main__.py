import sys

from qpart.cli import main

sys.exit(main())
