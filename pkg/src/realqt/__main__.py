import sys

from realqt.cli import main

sys.exit(main())
