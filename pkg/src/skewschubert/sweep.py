"""
Exhaustive and randomized verification sweeps.

A sweep enumerates independent instances in a fixed order, runs them (in a
process pool when ``jobs > 1``) and collects one record per instance. The
JSON form of a report depends only on the suite and its parameters, so runs
with different worker counts produce identical bytes. Wall-clock time is kept
on the report object but never serialized.
"""

from __future__ import annotations

import hashlib
import json
import os
import random
import tempfile
import time
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache, partial
from pathlib import Path
from typing import Any, Optional

from ._version import __version__
from .bracket import rewrite_search, skew_element
from .divdiff import ddiff_ij
from .identities import RANDOM_CHECKS
from .nilcox import schubert_expression, theorem2_constants
from .perm import Permutation, all_permutations, bruhat_leq
from .poly import eta
from .schubert import constants_by_product, schubert_poly
from .skewdiff import constants_by_skew, skew_apply

__all__ = ["SUITES", "SweepParams", "SweepReport", "run_sweep", "instances", "CACHE_ENV"]

SUITES = ("conjecture1", "conjecture2", "theorem1", "routes-equality", "identities")
CACHE_ENV = "SKEWSCHUBERT_CACHE"
STATUSES = ("pass", "fail", "budget-exhausted")


@dataclass(frozen=True)
class SweepParams:
    suite: str
    n: int
    depth: int = 8          # conjecture2: rewrite steps
    nodes: int = 20000      # conjecture2: expanded expressions
    trials: int = 100       # identities: random trials per identity

    def __post_init__(self):
        if self.suite not in SUITES:
            raise ValueError(f"unknown suite {self.suite!r}; choose from {', '.join(SUITES)}")

    def relevant(self) -> dict[str, int]:
        out = {"n": self.n}
        if self.suite == "conjecture2":
            out.update(depth=self.depth, nodes=self.nodes)
        if self.suite == "identities":
            out["trials"] = self.trials
        return out

    def cli_flags(self) -> str:
        flags = [f"--n {self.n}"]
        if self.suite == "conjecture2":
            flags += [f"--budget {self.depth}", f"--nodes {self.nodes}"]
        if self.suite == "identities":
            flags.append(f"--trials {self.trials}")
        return " ".join(flags)


@dataclass
class SweepReport:
    params: SweepParams
    records: list[dict[str, Any]]
    elapsed: float = field(default=0.0, compare=False)
    from_cache: bool = field(default=False, compare=False)

    @property
    def failures(self) -> list[dict[str, Any]]:
        return [r for r in self.records if r["status"] == "fail"]

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> dict[str, int]:
        out = {s: 0 for s in STATUSES}
        for r in self.records:
            out[r["status"]] += 1
        out["total"] = len(self.records)
        return out

    def to_dict(self) -> dict[str, Any]:
        return {
            "suite": self.params.suite,
            "params": self.params.relevant(),
            "engine": __version__,
            "summary": self.summary(),
            "instances": self.records,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=1) + "\n"

    @classmethod
    def from_dict(cls, params: SweepParams, data: dict[str, Any]) -> "SweepReport":
        if (data.get("suite") != params.suite or data.get("params") != params.relevant()
                or data.get("engine") != __version__):
            raise ValueError("cache entry does not match the requested sweep")
        records = data["instances"]
        if not isinstance(records, list) or any(
                not isinstance(r, dict) or r.get("status") not in STATUSES or "id" not in r
                for r in records):
            raise ValueError("malformed instance records")
        report = cls(params, records, from_cache=True)
        if report.summary() != data.get("summary"):
            raise ValueError("summary does not match instances")
        return report


# -- instance enumeration ----------------------------------------------------

def _w(p: Permutation, n: int) -> str:
    return "".join(map(str, p.padded(n))) if n < 10 else ",".join(map(str, p.padded(n)))


def instances(params: SweepParams) -> list[tuple[str, tuple]]:
    """``(id, args)`` for every instance, in report order."""
    n, suite = params.n, params.suite
    if n < 1:
        return []
    perms = all_permutations(n)
    out: list[tuple[str, tuple]] = []
    if suite == "theorem1":
        for w in perms:
            for i in range(1, n):
                for j in range(i + 1, n + 1):
                    out.append((f"w={_w(w, n)},i={i},j={j}", (w.key, i, j)))
    elif suite == "conjecture1":
        for w in perms:
            for v in perms:
                if bruhat_leq(v, w):
                    for u in perms:
                        out.append((f"u={_w(u, n)},v={_w(v, n)},w={_w(w, n)}",
                                    (u.key, v.key, w.key)))
    elif suite == "conjecture2":
        for w in perms:
            for v in perms:
                if bruhat_leq(v, w):
                    out.append((f"v={_w(v, n)},w={_w(w, n)}", (v.key, w.key)))
    elif suite == "routes-equality":
        for u in perms:
            for v in perms:
                for w in perms:
                    out.append((f"u={_w(u, n)},v={_w(v, n)},w={_w(w, n)}",
                                (u.key, v.key, w.key)))
    elif suite == "identities":
        if n < 2:
            return []
        for name in sorted(RANDOM_CHECKS):
            for t in range(params.trials):
                out.append((f"{name}#{t}", (name, t)))
    return out


# -- workers -----------------------------------------------------------------

@lru_cache(maxsize=None)
def _product(u: tuple, v: tuple, n: int):
    return constants_by_product(Permutation(u), Permutation(v), n)


@lru_cache(maxsize=None)
def _paths(w: tuple, u: tuple, n: int):
    return theorem2_constants(Permutation(w), Permutation(u), n)


def _run_one(params: SweepParams, args: tuple) -> dict[str, Any]:
    n, suite = params.n, params.suite
    if suite == "theorem1":
        key, i, j = args
        image = ddiff_ij(i, j, schubert_expression(n - 1)[Permutation(key)])
        if image.is_nonnegative():
            return {"status": "pass"}
        return {"status": "fail", "detail": {"image": str(image)}}
    if suite == "conjecture1":
        u, v, w = (Permutation(a) for a in args)
        value = skew_apply(w, v, schubert_poly(u))
        if value.is_nonnegative():
            return {"status": "pass"}
        return {"status": "fail", "detail": {"value": str(value)}}
    if suite == "conjecture2":
        v, w = (Permutation(a) for a in args)
        res = rewrite_search(skew_element(w, v), params.depth, params.nodes)
        if res.exhausted:
            return {"status": "budget-exhausted", "detail": {"explored": res.explored}}
        return {"status": "pass", "detail": {"form": str(res.found), "steps": res.steps}}
    if suite == "routes-equality":
        u, v, w = (Permutation(a) for a in args)
        prod = _product(u.key, v.key, n)[w]
        skew = eta(constants_by_skew(u, v, w)) if bruhat_leq(v, w) else 0
        paths = _paths(w.key, u.key, n)[v] if bruhat_leq(u, w) else 0
        detail = {"product": prod, "skew": skew, "paths": paths}
        return {"status": "pass" if prod == skew == paths else "fail", "detail": detail}
    if suite == "identities":
        name, t = args
        rng = random.Random(f"{name}:{n}:{t}")
        return {"status": "pass" if RANDOM_CHECKS[name](rng, n) else "fail"}
    raise ValueError(suite)


def _run_batch(params: SweepParams, batch: list[tuple]) -> list[dict[str, Any]]:
    return [_run_one(params, args) for args in batch]


def _compute(params: SweepParams, todo: list[tuple[str, tuple]], jobs: int) -> list[dict[str, Any]]:
    args = [a for _, a in todo]
    if jobs <= 1 or len(args) < 2:
        results = _run_batch(params, args)
    else:
        size = max(1, len(args) // (jobs * 8))
        batches = [args[k:k + size] for k in range(0, len(args), size)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = [r for chunk in pool.map(partial(_run_batch, params), batches) for r in chunk]
    records = []
    for (ident, _), res in zip(todo, results):
        rec = {"id": ident, **res}
        if res["status"] == "fail":
            rec["reproducer"] = (f"skewschubert verify {params.suite} "
                                 f"{params.cli_flags()} --only '{ident}'")
        records.append(rec)
    return records


# -- cache -------------------------------------------------------------------

def cache_path(params: SweepParams, directory: Path) -> Path:
    blob = json.dumps({"params": params.relevant(), "suite": params.suite,
                       "engine": __version__}, sort_keys=True)
    digest = hashlib.sha256(blob.encode()).hexdigest()[:16]
    return directory / f"{params.suite}-n{params.n}-{digest}.json"


def _load(path: Path, params: SweepParams) -> Optional[SweepReport]:
    if not path.exists():
        return None
    try:
        return SweepReport.from_dict(params, json.loads(path.read_text()))
    except (ValueError, KeyError, TypeError) as exc:
        warnings.warn(f"ignoring corrupt cache file {path}: {exc}; recomputing")
        return None


def _store(path: Path, report: SweepReport) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
    with os.fdopen(fd, "w") as fh:
        fh.write(report.to_json())
    os.replace(tmp, path)


def run_sweep(params: SweepParams, jobs: int = 1, cache: Optional[str | Path] = None,
              only: Optional[str] = None) -> SweepReport:
    """Run (or load) a sweep.

    ``cache`` falls back to the ``SKEWSCHUBERT_CACHE`` environment variable.
    ``only`` restricts the run to one instance id and bypasses the cache.
    """
    start = time.perf_counter()
    todo = instances(params)
    if only is not None:
        todo = [t for t in todo if t[0] == only]
        if not todo:
            raise KeyError(f"no instance {only!r} in {params.suite} with {params.relevant()}")
        report = SweepReport(params, _compute(params, todo, 1))
        report.elapsed = time.perf_counter() - start
        return report
    if cache is None:
        cache = os.environ.get(CACHE_ENV) or None
    path = cache_path(params, Path(cache)) if cache else None
    report = _load(path, params) if path else None
    if report is None:
        report = SweepReport(params, _compute(params, todo, jobs))
        if path:
            _store(path, report)
    report.elapsed = time.perf_counter() - start
    return report
