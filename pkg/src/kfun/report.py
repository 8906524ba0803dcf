"""Run configuration and verification reports.

Reports are plain records with a deterministic JSON form: for a fixed
config the serialized output is byte-identical across runs (wall times
are measured but emitted as null unless explicitly requested, since
they would break that contract).
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from fractions import Fraction


class CapOverflow(RuntimeError):
    """A computation left the configured truncation windows."""


def default_threads() -> int:
    try:
        return max(1, int(os.environ.get("KFUN_THREADS", "1")))
    except ValueError:
        return 1


@dataclass(frozen=True)
class RunConfig:
    command: str = "verify"
    partitions: tuple = ()
    beta_order: int = 3
    degree: int = 4
    nb: int = 2
    nc: int = 2
    nx: int = 2
    ny: int = 2
    max_size: int = 3
    mu_box: tuple = (3, 2, 1)
    mode: str = "symbolic"  # or "randomized"
    seed: int = 0
    fmt: str = "json"
    out: str = None
    timings: bool = False
    threads: int = field(default_factory=default_threads)

    def __post_init__(self):
        if self.beta_order < 0 or self.degree < 0:
            raise ValueError("caps must be non-negative")
        if min(self.nb, self.nc, self.nx, self.ny) < 0:
            raise ValueError("variable counts must be non-negative")
        if self.mode not in ("symbolic", "randomized"):
            raise ValueError(f"unknown mode {self.mode!r}")

    def caps(self) -> dict:
        return {"beta_order": self.beta_order, "degree": self.degree,
                "nb": self.nb, "nc": self.nc, "nx": self.nx, "ny": self.ny}


@dataclass
class VerifyReport:
    identity: str
    inputs: dict
    caps: dict
    status: str  # "pass" | "fail" | "cap-limited"
    witness: dict = None
    seed: int = 0
    wall_time: float = None

    def to_json_dict(self, timings=False) -> dict:
        return {
            "identity": self.identity,
            "inputs": self.inputs,
            "caps": self.caps,
            "status": self.status,
            "witness": self.witness,
            "seed": self.seed,
            "wall_time": round(self.wall_time, 3) if (timings and self.wall_time is not None) else None,
        }


def first_difference(lhs, rhs) -> dict:
    """Witness for lhs != rhs: the lexicographically first differing
    monomial with both coefficients, as strings."""
    diff = lhs - rhs
    if diff.is_zero():
        return None
    exp = min(diff.terms)
    names = lhs.ring.vars
    mono = {names[i]: e for i, e in enumerate(exp) if e}
    return {
        "monomial": mono,
        "lhs": str(lhs.terms.get(exp, Fraction(0))),
        "rhs": str(rhs.terms.get(exp, Fraction(0))),
    }


def compare(identity, inputs, caps, lhs, rhs, seed=0, boundary_hits=0,
            wall_time=None) -> VerifyReport:
    """pass when the difference vanishes identically; cap-limited when it
    does not but a series extraction touched its window boundary."""
    witness = first_difference(lhs, rhs)
    if witness is None:
        status = "pass"
    elif boundary_hits:
        status = "cap-limited"
        witness["boundary_hits"] = int(boundary_hits)
    else:
        status = "fail"
    return VerifyReport(identity, dict(inputs), dict(caps), status,
                        witness, seed, wall_time)


def serialize(reports, timings=False) -> str:
    """Deterministic JSON: reports sorted by (identity, inputs)."""
    rows = [r.to_json_dict(timings) for r in reports]
    rows.sort(key=lambda r: (r["identity"], json.dumps(r["inputs"], sort_keys=True)))
    return json.dumps(rows, sort_keys=True, indent=2) + "\n"


def summarize(reports) -> dict:
    out = {"pass": 0, "fail": 0, "cap-limited": 0}
    for r in reports:
        out[r.status] += 1
    return out
