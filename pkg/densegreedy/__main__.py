from densegreedy.cli import main

raise SystemExit(main())
