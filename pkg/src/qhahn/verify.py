"""Suite configuration, runner, and report emitters.

A CheckConfig fixes the base q, the named rational parameters, the truncation
orders and the seed; ``run_suite`` runs every registered check under every
config (optionally filtered by a glob pattern) and returns order-stable
results.  Checks are pure and independent, so the runner may execute them on
a thread pool (QHAHN_THREADS); results are identical to serial execution.

Reports: JSON ({suite_version, runs: [{config, results}]}) and a CSV summary
(name, status, elapsed_ms; rows grouped by config in run order).  Timings are
left out of the JSON report unless explicitly requested so that identical
flags produce byte-identical reports.
"""

from __future__ import annotations

import fnmatch
import json
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from qhahn._version import __version__ as SUITE_VERSION
from qhahn.checks import REGISTRY, Witness
from qhahn.errors import DomainError, QhahnError, UnknownCheck

_EXACT_BAD_Q = (Fraction(0), Fraction(1), Fraction(-1))


@dataclass(frozen=True)
class CheckConfig:
    """Parameters one suite run is evaluated under."""

    q: Fraction = Fraction(1, 2)
    params: dict = field(default_factory=dict)
    cap_t: int = 8
    cap_s: int = 8
    mode: str = "exact"
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "q", Fraction(self.q))
        object.__setattr__(
            self, "params", {name: Fraction(v) for name, v in self.params.items()}
        )
        if self.mode not in ("exact", "numeric"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.cap_t < 0 or self.cap_s < 0:
            raise ValueError("caps must be nonnegative")

    def to_json_dict(self) -> dict:
        return {
            "q": str(self.q),
            "params": {name: str(self.params[name]) for name in sorted(self.params)},
            "cap_t": self.cap_t,
            "cap_s": self.cap_s,
            "mode": self.mode,
            "seed": self.seed,
        }


def default_configs() -> tuple:
    """The two mandated parameter sets that guard against coincidences."""
    first = CheckConfig(
        q=Fraction(1, 2),
        params={
            "a": Fraction(1, 7),
            "b": Fraction(1, 3),
            "alpha": Fraction(2, 5),
            "c": Fraction(3, 7),
            "d": Fraction(1, 5),
            "v": Fraction(3, 8),
        },
    )
    second = CheckConfig(
        q=Fraction(2, 3),
        params={
            "a": Fraction(-1, 5),
            "b": Fraction(1, 2),
            "alpha": Fraction(1, 3),
            "c": Fraction(1, 4),
            "d": Fraction(2, 7),
            "v": Fraction(2, 9),
        },
    )
    return (first, second)


@dataclass
class CheckResult:
    name: str
    config: CheckConfig
    status: str  # pass | fail | error
    witness: Optional[Witness]
    elapsed: float
    detail: str = ""

    def to_json_dict(self, include_timings: bool = False) -> dict:
        doc: dict = {"name": self.name, "status": self.status}
        if self.witness is not None:
            witness_doc = {
                "monomial": list(self.witness.monomial),
                "lhs": None if self.witness.lhs is None else str(self.witness.lhs),
                "rhs": None if self.witness.rhs is None else str(self.witness.rhs),
            }
            if self.witness.part:
                witness_doc["part"] = self.witness.part
            doc["witness"] = witness_doc
        if self.detail:
            doc["detail"] = self.detail
        if include_timings:
            doc["elapsed_ms"] = int(round(self.elapsed * 1000))
        return doc


def check_names() -> list:
    return list(REGISTRY)


def registered_checks() -> list:
    """(name, description) pairs in registry order."""
    return [(name, REGISTRY[name].description) for name in REGISTRY]


def select_checks(pattern: Optional[str]) -> list:
    """Names matching a glob pattern (or all names when pattern is None)."""
    if pattern is None:
        return check_names()
    return [name for name in REGISTRY if fnmatch.fnmatchcase(name, pattern)]


def _validate_config(config: CheckConfig):
    if config.mode == "numeric":
        if not 0 < config.q < 1:
            raise DomainError(f"numeric mode needs 0 < q < 1, got {config.q}")
    elif config.q in _EXACT_BAD_Q:
        raise DomainError(
            f"exact mode needs q with q^k != 1 for all reached k, got {config.q}"
        )


def run_check(name: str, config: CheckConfig) -> CheckResult:
    """Run one registered check and capture its outcome."""
    if name not in REGISTRY:
        raise UnknownCheck(f"no check named {name!r}")
    start = time.perf_counter()
    try:
        _validate_config(config)
        witness = REGISTRY[name].func(config)
        status = "pass" if witness is None else "fail"
        detail = witness.part if witness else ""
    except QhahnError as exc:
        witness = None
        status = "error"
        detail = f"{type(exc).__name__}: {exc}"
    elapsed = time.perf_counter() - start
    return CheckResult(name, config, status, witness, elapsed, detail)


def _thread_count(threads: Optional[int]) -> int:
    if threads is None:
        try:
            threads = int(os.environ.get("QHAHN_THREADS", "1"))
        except ValueError:
            threads = 1
    return max(1, threads)


def run_suite(
    configs: Optional[Sequence[CheckConfig]] = None,
    name_filter: Optional[str] = None,
    threads: Optional[int] = None,
) -> list:
    """Run the selected checks under every config, order-stable."""
    if configs is None:
        configs = default_configs()
    names = select_checks(name_filter)
    if not names:
        raise UnknownCheck(f"no check matches pattern {name_filter!r}")
    jobs = [(name, config) for config in configs for name in names]
    workers = _thread_count(threads)
    if workers == 1:
        return [run_check(name, config) for name, config in jobs]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda job: run_check(*job), jobs))


def all_passed(results: Iterable[CheckResult]) -> bool:
    return all(result.status == "pass" for result in results)


def report_json(results: Sequence[CheckResult], include_timings: bool = False) -> str:
    """Deterministic JSON report; byte-identical for identical inputs."""
    runs = []
    for result in results:
        if not runs or runs[-1][0] != result.config:
            runs.append((result.config, []))
        runs[-1][1].append(result)
    doc = {
        "suite_version": SUITE_VERSION,
        "runs": [
            {
                "config": config.to_json_dict(),
                "results": [r.to_json_dict(include_timings) for r in group],
            }
            for config, group in runs
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def report_csv(results: Sequence[CheckResult]) -> str:
    """CSV summary: name, status, elapsed_ms (rows grouped by config)."""
    lines = ["name,status,elapsed_ms"]
    for result in results:
        lines.append(
            f"{result.name},{result.status},{int(round(result.elapsed * 1000))}"
        )
    return "\n".join(lines) + "\n"
