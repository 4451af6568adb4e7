from prismdim.cli import main

raise SystemExit(main())
