import sys

from fplus_lda.cli.main import main

sys.exit(main())
