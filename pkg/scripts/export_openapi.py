#!/usr/bin/env python3
"""Write the service's OpenAPI description to docs/openapi.json."""

import json
import sys
from pathlib import Path

from mcda_select.api import create_app


def main() -> int:
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("docs/openapi.json")
    out.parent.mkdir(parents=True, exist_ok=True)
    app = create_app(precompute_stats=False)
    out.write_text(json.dumps(app.openapi(), indent=2, sort_keys=True) + "\n")
    print(f"wrote {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
