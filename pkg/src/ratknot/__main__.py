import sys

from ratknot.cli import main

sys.exit(main())
