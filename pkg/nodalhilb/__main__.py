import sys
from nodalhilb.cli import main

sys.exit(main())
