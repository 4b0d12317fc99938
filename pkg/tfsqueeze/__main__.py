import sys

from tfsqueeze.cli.main import main

sys.exit(main())
