"""JSON input documents and the bundled example fixtures."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .exactla import FgAbelianGroup, IntMatrix
from .fan import Fan
from .stacky import StackyFan

MODES = ("stacky", "fantastack")
_KEYS = {"lattice_rank", "rays", "max_cones", "target", "lift", "mode"}


class InputError(ValueError):
    """Structurally invalid input document."""


def _int(x, what) -> int:
    if not isinstance(x, int) or isinstance(x, bool):
        raise InputError(f"{what} must be an integer, got {x!r}")
    return x


def _int_rows(x, what) -> list[list[int]]:
    if not isinstance(x, list):
        raise InputError(f"{what} must be an array of integer arrays")
    out = []
    for i, row in enumerate(x):
        if not isinstance(row, list):
            raise InputError(f"{what}[{i}] must be an array")
        out.append([_int(v, f"{what}[{i}]") for v in row])
    return out


@dataclass(frozen=True)
class InputDocument:
    lattice_rank: int
    rays: list[list[int]]
    max_cones: list[list[int]]
    target_rank: int
    torsion: list[int]
    lift: list[list[int]]
    mode: str = "stacky"
    extra: dict = field(default_factory=dict, compare=False, repr=False)

    @classmethod
    def from_dict(cls, doc) -> InputDocument:
        if not isinstance(doc, dict):
            raise InputError("input must be a JSON object")
        missing = {"lattice_rank", "rays", "max_cones", "target", "lift"} - doc.keys()
        if missing:
            raise InputError(f"missing fields: {sorted(missing)}")
        unknown = doc.keys() - _KEYS
        if unknown:
            raise InputError(f"unknown fields: {sorted(unknown)}")
        r = _int(doc["lattice_rank"], "lattice_rank")
        if r < 0:
            raise InputError("lattice_rank must be >= 0")
        rays = _int_rows(doc["rays"], "rays")
        cones = _int_rows(doc["max_cones"], "max_cones")
        target = doc["target"]
        if not isinstance(target, dict) or set(target) != {"rank", "torsion"}:
            raise InputError("target must be an object with exactly 'rank' and 'torsion'")
        d = _int(target["rank"], "target.rank")
        if d < 0:
            raise InputError("target.rank must be >= 0")
        if not isinstance(target["torsion"], list):
            raise InputError("target.torsion must be an array")
        torsion = [_int(a, "target.torsion") for a in target["torsion"]]
        if any(a < 2 for a in torsion):
            raise InputError("every torsion coefficient must be >= 2")
        lift = _int_rows(doc["lift"], "lift")
        mode = doc.get("mode", "stacky")
        if mode not in MODES:
            raise InputError(f"mode must be one of {MODES}, got {mode!r}")
        if len(lift) != d + len(torsion):
            raise InputError(f"lift must have rank + |torsion| = {d + len(torsion)} rows, got {len(lift)}")
        for i, row in enumerate(lift):
            if len(row) != r:
                raise InputError(f"lift row {i} has length {len(row)}, expected lattice_rank = {r}")
        ray_len = d if mode == "fantastack" else r
        for i, v in enumerate(rays):
            if len(v) != ray_len:
                raise InputError(f"ray {i} has length {len(v)}, expected {ray_len}")
        for k, c in enumerate(cones):
            for i in c:
                if not 0 <= i < len(rays):
                    raise InputError(f"max cone {k} refers to ray {i}; there are {len(rays)} rays")
        if mode == "fantastack" and torsion:
            raise InputError("fantastack mode requires an empty torsion list")
        return cls(r, rays, cones, d, torsion, lift, mode)

    @classmethod
    def load(cls, path) -> InputDocument:
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as exc:
            raise InputError(f"cannot read {path}: {exc.strerror}") from None
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"{path}: invalid JSON ({exc})") from None
        return cls.from_dict(doc)

    def to_dict(self) -> dict:
        doc = {
            "lattice_rank": self.lattice_rank,
            "rays": self.rays,
            "max_cones": self.max_cones,
            "target": {"rank": self.target_rank, "torsion": self.torsion},
            "lift": self.lift,
        }
        if self.mode != "stacky":
            doc["mode"] = self.mode
        return doc

    def dumps(self) -> str:
        items = [f"  {json.dumps(k)}: {json.dumps(v)}" for k, v in self.to_dict().items()]
        return "{\n" + ",\n".join(items) + "\n}\n"

    def stacky_fan(self) -> StackyFan:
        if self.mode != "stacky":
            raise InputError("document is in fantastack mode")
        fan = Fan(self.lattice_rank, self.rays, self.max_cones)
        lift = IntMatrix(self.lift, shape=(len(self.lift), self.lattice_rank))
        return StackyFan(fan, FgAbelianGroup(self.target_rank, tuple(self.torsion)), lift)

    def fantastack_data(self) -> tuple[Fan, list[tuple[int, ...]]]:
        """The fan on Z^d and the images beta(e_i) (columns of the lift)."""
        if self.mode != "fantastack":
            raise InputError("document is not in fantastack mode")
        fan = Fan(self.target_rank, self.rays, self.max_cones)
        images = [tuple(row[i] for row in self.lift) for i in range(self.lattice_rank)]
        return fan, images


FIXTURES = {
    "p64": {
        "lattice_rank": 2,
        "rays": [[1, 0], [0, 1]],
        "max_cones": [[0], [1]],
        "target": {"rank": 1, "torsion": [2]},
        "lift": [[2, -3], [1, -1]],
    },
    "blowupA3": {
        "lattice_rank": 3,
        "rays": [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]],
        "max_cones": [[0, 1, 3], [1, 2, 3], [2, 0, 3]],
        "target": {"rank": 2, "torsion": [2]},
        "lift": [[3, -1, 0], [4, 0, -1], [0, -1, 1]],
    },
    "bg": {
        "lattice_rank": 0,
        "rays": [],
        "max_cones": [[]],
        "target": {"rank": 2, "torsion": [2, 3]},
        "lift": [[], [], [], []],
    },
    "fanta": {
        "lattice_rank": 3,
        "rays": [[1, 0], [0, 1]],
        "max_cones": [[0, 1]],
        "target": {"rank": 2, "torsion": []},
        "lift": [[2, 0, 4], [0, 3, 2]],
        "mode": "fantastack",
    },
    "p2": {
        "lattice_rank": 3,
        "rays": [[1, 0], [0, 1], [-1, -1]],
        "max_cones": [[0, 1], [1, 2], [2, 0]],
        "target": {"rank": 2, "torsion": []},
        "lift": [[1, 0, -1], [0, 1, -1]],
        "mode": "fantastack",
    },
}

# Simplified ring expected for each fixture, with the renaming that takes
# the target's variable names to the names the simplifier produces.
TARGETS = {
    "p64": ("Z[t]/(24*t^2)", {"t": "y1"}),
    "blowupA3": ("Z[u,v]/((u+2*v)*(u+6*v)*(u+8*v))", {"u": "x4", "v": "y1"}),
    "bg": ("Z[z1,z2,y1,y2]/(2*y1, 3*y2)", {}),
    "fanta": ("Z[s,t]/(2*t)", {}),
    "p2": ("Z[t]/(t^3)", {"t": "x3"}),
}


def fixture(name: str) -> InputDocument:
    try:
        return InputDocument.from_dict(FIXTURES[name])
    except KeyError:
        raise KeyError(f"unknown example {name!r}; choose from {sorted(FIXTURES)}") from None
