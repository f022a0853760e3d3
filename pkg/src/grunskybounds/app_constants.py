from __future__ import annotations

from dataclasses import dataclass
from typing import Any

PROG_NAME = "grunskybounds"
BOX_CAP_ENV = "GRUNSKY_BOX_CAP"

SETTINGS_EXT_TO_FORMAT = {
    ".json": "json",
    ".yaml": "yaml",
    ".yml": "yaml",
}

FUNCTION_CHOICES = ["koebe", "identity", "geometric", "custom"]
TARGET_CHOICES = ["gamma3", "diff43", "zalcman23", "h22", "h31"]
GRID_TARGET_CHOICES = ["f1", "f2", "f3", "f4", "phi1", "phi2"]
METHOD_CHOICES = ["newton", "grid", "certified"]
OUTPUT_FORMATS = ["json", "csv", "text"]

MIN_ORDER = 5
MAX_ORDER = 64
MIN_CAP = 8

DEFAULT_SETTINGS: dict[str, Any] = {
    "order": 10,
    "cap": 8,
    "eps": 1e-6,
    "tol": 1e-10,
    "box_cap": 10_000_000,
    "method": "newton",
    "format": "text",
    "nx": 201,
    "ny": 201,
}

TARGET_FUNCTIONS = {
    "gamma3": "F1",
    "diff43": "F2",
    "zalcman23": "F3",
    "h22": "F4",
}

FLOAT_FORMAT = ".9g"


@dataclass(frozen=True)
class PublishedBound:
    target: str
    value: str
    digits: int
    previous: str | None = None
    argmax: tuple[float, float] | None = None
    announced: str | None = None


PUBLISHED_BOUNDS: dict[str, PublishedBound] = {
    "gamma3": PublishedBound("gamma3", "0.5566178", 7, previous="0.7688", argmax=(0.81267, 0.243532)),
    "diff43": PublishedBound("diff43", "1.751853", 7, previous="2.1033299", argmax=(0.836343, 0.2872063)),
    "zalcman23": PublishedBound("zalcman23", "2.10064", 6, argmax=(0.9740, 0.0)),
    "h22": PublishedBound("h22", "1.3614356", 8, previous="11/3", argmax=(0.918107, 0.0)),
    "h31": PublishedBound("h31", "1.83056", 5, previous="3.258796", announced="2.321434"),
}


@dataclass(frozen=True)
class PublishedEdge:
    value: str
    abscissa: str | None = None
    # Rounded entries match within half a unit of the last digit; the rest are truncated.
    rounded: bool = False
    # High-precision maximum for entries whose printed digits are rounded or off.
    reference: str | None = None


# Published maximum per objective and edge.
PUBLISHED_EDGES: dict[str, dict[str, PublishedEdge]] = {
    "F1": {
        "y0": PublishedEdge("0.4472", "0"),
        "x0": PublishedEdge("0.4472", "0"),
        "x1": PublishedEdge("0.333333"),
        "curve": PublishedEdge("0.4472", "0.898344"),
    },
    "F2": {
        "y0": PublishedEdge("1.13666", "0.94941"),
        "x0": PublishedEdge("0.8944"),
        "x1": PublishedEdge("1"),
        "curve": PublishedEdge("1.649613", "0.862808", reference="1.649614024793"),
    },
    "F3": {
        "y0": PublishedEdge("2.10064", "0.9740"),
        "x0": PublishedEdge("0.8944"),
        "x1": PublishedEdge("2"),
        "curve": PublishedEdge("2", "1"),
    },
    "F4": {
        "y0": PublishedEdge("1.3614356", "0.918107"),
        "x0": PublishedEdge("1.333"),
        "x1": PublishedEdge("1"),
        "curve": PublishedEdge("1.333"),
    },
    "PHI1": {
        "y0": PublishedEdge("0.51639"),
        "x0": PublishedEdge("0.533"),
        "x1": PublishedEdge("0.51639"),
        "curve": PublishedEdge("0.977238", "0.813", rounded=True, reference="0.977237979066635"),
    },
    "PHI2": {
        "y0": PublishedEdge("0.44721", "0"),
        "x0": PublishedEdge("0.44721", "0"),
        "curve": PublishedEdge("0.2886751", "0.7071067"),
    },
}
