import sys

from cohsys.cli import main

sys.exit(main())
