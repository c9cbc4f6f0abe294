"""Job files: a line-oriented text format and its JSON mirror.

Text grammar::

    job     := { line }
    line    := blank | comment | entry
    comment := "#" { any }
    entry   := key ":" value
    key     := "command" | "ring" | "map" | "points" | "seed" | "retries"
             | "field_prescreen" | "space" | "name"
    value   := list | scalar
    list    := "[" [ item { "," item } ] "]"
    item    := list | scalar
    scalar  := any text without top-level "," "[" "]"

Polynomials use ``^`` for powers and may contain parentheses but
no commas.  Point coordinates are integers or ``p/q`` rationals.  The JSON
form is an object with the same keys (``options`` may group seed,
retries and field_prescreen).
"""
from __future__ import annotations

import hashlib
import json
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from ..errors import InputError
from ..polycore import PolyRing, to_rational

COMMANDS = ("milnor", "chi", "csm", "limit-cycle", "lagrangian", "conormal",
            "check-nbl", "mu-total", "verify-euler", "segre")
SEGRE_SPACES = ("blowup", "total-transform", "sigma")
_KEYS = {"command", "ring", "map", "points", "seed", "retries", "field_prescreen",
         "space", "name", "options"}


class JobFormatError(InputError):
    """Malformed job file."""


@dataclass(frozen=True)
class JobOptions:
    seed: Optional[int] = None
    retries: int = 3
    field_prescreen: bool = False


@dataclass(frozen=True)
class JobSpec:
    command: str
    ring: Tuple[str, ...]
    map: Tuple[str, ...]
    points: Tuple[Tuple[str, ...], ...] = ()
    options: JobOptions = field(default_factory=JobOptions)
    space: str = "blowup"
    name: str = ""

    def polynomial_ring(self) -> PolyRing:
        return PolyRing(self.ring)

    def canonical(self) -> Dict[str, Any]:
        """Inputs that determine the result (the seed is handled separately)."""
        return {"command": self.command, "ring": list(self.ring), "map": list(self.map),
                "points": [list(p) for p in self.points], "space": self.space}

    def default_seed(self) -> int:
        blob = json.dumps(self.canonical(), sort_keys=True, separators=(",", ":"))
        return int.from_bytes(hashlib.sha256(blob.encode()).digest()[:8], "big")

    def effective_seed(self) -> int:
        return self.options.seed if self.options.seed is not None else self.default_seed()

    def with_options(self, **changes) -> "JobSpec":
        opts = asdict(self.options)
        opts.update({k: v for k, v in changes.items() if v is not None})
        return JobSpec(self.command, self.ring, self.map, self.points, JobOptions(**opts),
                       self.space, self.name)


# -- text format --------------------------------------------------------------------

def _split_top(text: str) -> List[str]:
    items, depth, cur = [], 0, []
    for ch in text:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
            if depth < 0:
                raise JobFormatError(f"unbalanced ']' in {text!r}")
        if ch == "," and depth == 0:
            items.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    if depth:
        raise JobFormatError(f"unbalanced '[' in {text!r}")
    last = "".join(cur).strip()
    if last or items:
        items.append(last)
    return items


def parse_value(text: str):
    text = text.strip()
    if text.startswith("["):
        if not text.endswith("]"):
            raise JobFormatError(f"list not closed: {text!r}")
        inner = text[1:-1].strip()
        if not inner:
            return []
        parts = _split_top(inner)
        if any(p == "" for p in parts):
            raise JobFormatError(f"empty list item in {text!r}")
        return [parse_value(p) for p in parts]
    if "[" in text or "]" in text:
        raise JobFormatError(f"stray bracket in {text!r}")
    return text


def parse_job_text(text: str) -> Dict[str, Any]:
    raw: Dict[str, Any] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        if ":" not in s:
            raise JobFormatError(f"line {lineno}: expected 'key: value'")
        key, value = s.split(":", 1)
        key = key.strip()
        if key not in _KEYS - {"options"}:
            raise JobFormatError(f"line {lineno}: unknown key {key!r}")
        if key in raw:
            raise JobFormatError(f"line {lineno}: duplicate key {key!r}")
        raw[key] = parse_value(value)
    return raw


def _as_bool(v) -> bool:
    if isinstance(v, bool):
        return v
    s = str(v).strip().lower()
    if s in ("true", "yes", "1"):
        return True
    if s in ("false", "no", "0"):
        return False
    raise JobFormatError(f"not a boolean: {v!r}")


def _as_int(v, what: str, lo: int = 0, hi: Optional[int] = None) -> int:
    try:
        n = int(str(v).strip()) if not isinstance(v, int) or isinstance(v, bool) else v
    except ValueError:
        raise JobFormatError(f"{what} must be an integer, got {v!r}") from None
    if isinstance(v, bool) or n < lo or (hi is not None and n > hi):
        raise JobFormatError(f"{what} out of range: {v!r}")
    return n


def _str_list(v, what: str) -> Tuple[str, ...]:
    if isinstance(v, str):
        v = [v]
    if not isinstance(v, list) or not all(isinstance(x, (str, int)) for x in v):
        raise JobFormatError(f"{what} must be a list of strings")
    return tuple(str(x).strip() for x in v)


def _rational_text(c) -> str:
    q = to_rational(c if not isinstance(c, str) else c.strip())
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def job_from_dict(raw: Dict[str, Any]) -> JobSpec:
    unknown = set(raw) - _KEYS
    if unknown:
        raise JobFormatError(f"unknown keys {sorted(unknown)}")
    command = str(raw.get("command", "")).strip()
    if command not in COMMANDS:
        raise JobFormatError(f"unknown command {command!r}; expected one of {COMMANDS}")
    if "ring" not in raw or "map" not in raw:
        raise JobFormatError("'ring' and 'map' are required")
    ring = _str_list(raw["ring"], "ring")
    if not ring or len(set(ring)) != len(ring):
        raise JobFormatError("ring must list distinct variables")
    polys = _str_list(raw["map"], "map")
    if not polys:
        raise JobFormatError("map must contain at least one polynomial")
    pts_raw = raw.get("points", [])
    if not isinstance(pts_raw, list):
        raise JobFormatError("points must be a list of lists")
    points = []
    for p in pts_raw:
        if not isinstance(p, list):
            raise JobFormatError("each point must be a list")
        try:
            points.append(tuple(_rational_text(c) for c in p))
        except (ValueError, ZeroDivisionError, TypeError, InputError):
            raise JobFormatError(f"bad point {p!r}") from None
    opts = dict(raw.get("options") or {})
    for k in ("seed", "retries", "field_prescreen"):
        if k in raw:
            opts[k] = raw[k]
    seed = opts.get("seed")
    options = JobOptions(
        seed=None if seed in (None, "") else _as_int(seed, "seed", 0, 2 ** 64 - 1),
        retries=_as_int(opts.get("retries", 3), "retries"),
        field_prescreen=_as_bool(opts.get("field_prescreen", False)),
    )
    space = str(raw.get("space", "blowup")).strip()
    if space not in SEGRE_SPACES:
        raise JobFormatError(f"space must be one of {SEGRE_SPACES}")
    job = JobSpec(command, ring, polys, tuple(points), options, space, str(raw.get("name", "")))
    validate(job)
    return job


def validate(job: JobSpec) -> None:
    """Command-specific checks; polynomials must parse in the declared ring."""
    R = job.polynomial_ring()
    for p in job.map:
        R(p)
    m, n = len(job.ring), len(job.map)
    if n > m:
        raise JobFormatError(f"{n} components for {m} variables")
    single = ("chi", "csm", "limit-cycle", "lagrangian", "verify-euler", "segre")
    if job.command in single and n != 1:
        raise JobFormatError(f"{job.command} takes exactly one polynomial")
    for p in job.points:
        want = n if job.command == "check-nbl" else m
        if len(p) != want:
            raise JobFormatError(f"point {p} has {len(p)} coordinates, expected {want}")
    if job.command in ("verify-euler",) and not job.points:
        raise JobFormatError(f"{job.command} needs points")


def load_job(path) -> JobSpec:
    path = Path(path)
    text = path.read_text()
    if path.suffix == ".json":
        try:
            raw = json.loads(text)
        except json.JSONDecodeError as e:
            raise JobFormatError(f"{path}: {e}") from None
        if not isinstance(raw, dict):
            raise JobFormatError(f"{path}: a job is a JSON object")
    else:
        raw = parse_job_text(text)
    raw.setdefault("name", path.stem)
    return job_from_dict(raw)


def load_manifest(path) -> List[Path]:
    """One job path per line (relative to the manifest), '#' comments allowed."""
    path = Path(path)
    out = []
    for line in path.read_text().splitlines():
        s = line.strip()
        if s and not s.startswith("#"):
            out.append((path.parent / s).resolve())
    return out
