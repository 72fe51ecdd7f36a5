import sys

from rookhl.cli import main

sys.exit(main())
