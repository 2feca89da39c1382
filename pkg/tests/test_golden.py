"""Golden reports; regenerate with ``python3 tests/test_golden.py``."""

import json
from pathlib import Path

import pytest

from ringinv import census, make_ring
from ringinv.verify import verify_all

GOLDEN = Path(__file__).parent / "golden"
SPECS = ["zmod:6", "zmod:12", "mat:2:z2"]


def _name(kind, spec):
    return GOLDEN / f"{kind}_{spec.replace(':', '_')}.json"


def build(kind, spec):
    R = make_ring(spec)
    if kind == "census":
        return census(R).to_json()
    return [r.to_json(timing=False) for r in verify_all(R)]


@pytest.mark.parametrize("kind", ["verify", "census"])
@pytest.mark.parametrize("spec", SPECS)
def test_matches_golden(kind, spec):
    expected = json.loads(_name(kind, spec).read_text())
    assert build(kind, spec) == expected


if __name__ == "__main__":
    GOLDEN.mkdir(exist_ok=True)
    for spec in SPECS:
        for kind in ("verify", "census"):
            _name(kind, spec).write_text(json.dumps(build(kind, spec), indent=1, sort_keys=True) + "\n")
