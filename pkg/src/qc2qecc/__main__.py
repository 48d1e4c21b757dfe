import sys

from qc2qecc.cli import main

sys.exit(main())
