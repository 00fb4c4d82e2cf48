"""JSON run configuration for the command line tool."""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import asdict, dataclass, field, fields
from pathlib import Path

from .dynamics import DynamicsConfig, GridSpec
from .maps import DEMO_DELTA, DEMO_DELTA_FT, MapKind, MapSpec, Mode
from .regions import EscapeSeeds


@dataclass
class RunConfig:
    map: str = "p"
    d: int | None = None
    delta: float | None = None
    mode: str = "demo"
    eps: float = 1.0 / 32
    eta: float | None = None
    grid: str = "-1.5,-1.5,1.5,1.5,512x512"
    escape_radius: float | None = None
    zero_tol: float = 1e-9
    max_iter: int = 10_000
    check_horizon: int = 10
    seed: int = 0
    workers: int = 1
    out: str | None = None
    checks: list[str] = field(default_factory=list)

    def __post_init__(self):
        # fail early on anything that would not build
        self.map_spec()
        self.dynamics()
        self.seeds()
        self.grid_spec()

    def map_spec(self) -> MapSpec:
        kind = MapKind(self.map)
        mode = Mode(self.mode)
        if mode is Mode.FAITHFUL:
            spec = MapSpec.faithful(kind)
            if self.d is not None or self.delta is not None:
                spec = MapSpec(kind, self.d if self.d is not None else spec.d,
                               self.delta if self.delta is not None else spec.delta,
                               mode, spec.k_hat)
            return spec
        default_delta = DEMO_DELTA_FT if kind is MapKind.TRANSCENDENTAL_FT else DEMO_DELTA
        return MapSpec(kind, 5 if self.d is None else self.d,
                       default_delta if self.delta is None else self.delta, mode)

    def dynamics(self) -> DynamicsConfig:
        extra = {} if self.escape_radius is None else {"escape_radius": self.escape_radius}
        return DynamicsConfig.for_spec(self.map_spec(), zero_tol=self.zero_tol,
                                       max_iter=self.max_iter,
                                       check_horizon=self.check_horizon, **extra)

    def seeds(self) -> EscapeSeeds:
        return EscapeSeeds(self.eps)

    def grid_spec(self) -> GridSpec:
        return GridSpec.parse(self.grid)

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2, sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> "RunConfig":
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        return cls(**data)

    @classmethod
    def from_json(cls, text: str) -> "RunConfig":
        return cls.from_dict(json.loads(text))

    @classmethod
    def load(cls, path) -> "RunConfig":
        return cls.from_json(Path(path).read_text(encoding="utf-8"))


def write_atomic(path, data: bytes | str) -> None:
    """Write via a temporary file in the target directory, then rename."""
    path = Path(path)
    if isinstance(data, str):
        data = data.encode("utf-8")
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
