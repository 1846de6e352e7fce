import sys

from hypertrees.cli import main

sys.exit(main())
