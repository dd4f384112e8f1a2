from .workbench import main

raise SystemExit(main())
