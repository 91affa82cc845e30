#!/usr/bin/env python3
"""Record backend responses into tests/fixtures/server.json.

The UI tests run against these recorded responses, so the values shown in
the scripted sessions are exactly what the service returns. Re-run after
backend changes:

    python3 frontend/scripts/record-fixtures.py
"""

import json
from pathlib import Path

from fastapi.testclient import TestClient

from stegotax.service import create_app

DESCRIPTORS = [
    "indirect (dead drop) E1.1n1.",
    "multi-level E1.1n1.",
    "E1.1n1.",
    "indirect E1.1n1.",
]


def main() -> None:
    client = TestClient(create_app())

    def recorded(path: str, descriptor: str) -> dict:
        response = client.post(path, json={"descriptor": descriptor})
        return {"status": response.status_code, "body": response.json()}

    fixtures = {
        "taxonomy": client.get("/api/taxonomy").json(),
        "descriptors": {
            descriptor: {
                "normalize": recorded("/api/normalize", descriptor),
                "validate": recorded("/api/validate", descriptor),
                "explain": recorded("/api/explain", descriptor),
            }
            for descriptor in DESCRIPTORS
        },
    }
    out = Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "server.json"
    out.write_text(json.dumps(fixtures, indent=2) + "\n", encoding="utf-8")
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
