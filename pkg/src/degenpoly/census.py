"""Exhaustive census of degenerate polynomials in a coefficient box.

Monic boxes hold X^n + a_1 X^(n-1) + ... + a_n with |a_j| <= H for j >= 1;
the height used for bucketing is max_{j>=1} |a_j| (X^n sits in bucket 0).
General boxes hold all a_0 != 0 with every |a_j| <= H, bucketed by the full
height.  Only a_0 >= 1 is enumerated for general boxes and every count is
doubled, since f -> -f preserves height, degeneracy and irreducibility.

Checkpoint format (JSON lines, UTF-8):

* line 1: ``{"format": "degenpoly-census", "version": 1, "config": {...}}``
  echoing n, H_max, variant, split and order_mode;
* one line per finished partition:
  ``{"id": i, "total": [...], "D": [...], "I": [...], "R": [...]}`` holding
  per-height histograms indexed h = 0..H_max (I and R are null unless split);
  counts are before the general-variant doubling.
"""

from __future__ import annotations

import json
import os
import threading
import time
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from ._kernel import KernelTables, run_partition
from .degeneracy import DEFAULT_GAP, is_degenerate
from .irreducibility import is_irreducible_q
from .polycore import IntPoly, height
from .resultants import ORDER_MODES

VARIANTS = ("monic", "general")
CHECKPOINT_FORMAT = "degenpoly-census"
CHECKPOINT_VERSION = 1


class CensusConfigError(ValueError):
    pass


class CheckpointError(RuntimeError):
    pass


@dataclass(frozen=True)
class CensusConfig:
    n: int
    H_max: int
    variant: str = "monic"
    split: bool = False
    prefilter: bool = True
    order_mode: str = "safe"
    threads: int = 1
    checkpoint_path: str | None = None

    def validate(self) -> "CensusConfig":
        if not isinstance(self.n, int) or self.n < 2:
            raise CensusConfigError("degree n must be an integer >= 2")
        if not isinstance(self.H_max, int) or self.H_max < 1:
            raise CensusConfigError("H_max must be a positive integer")
        if self.variant not in VARIANTS:
            raise CensusConfigError(f"variant must be one of {VARIANTS}")
        if self.split and self.n > 4:
            raise CensusConfigError("split needs n <= 4")
        if self.order_mode not in ORDER_MODES:
            raise CensusConfigError(f"order_mode must be one of {ORDER_MODES}")
        if not isinstance(self.threads, int) or self.threads < 1:
            raise CensusConfigError("threads must be a positive integer")
        return self

    def echo(self) -> dict:
        return {
            "n": self.n,
            "H_max": self.H_max,
            "variant": self.variant,
            "split": self.split,
            "order_mode": self.order_mode,
        }


@dataclass(frozen=True)
class CountRecord:
    variant: str
    n: int
    H: int
    total: int
    D: int
    I: int | None = None
    R: int | None = None
    wall_ms: float | None = None

    def as_dict(self) -> dict:
        return {
            "variant": self.variant,
            "n": self.n,
            "H": self.H,
            "total": self.total,
            "degenerate": self.D,
            "irr_degenerate": self.I,
            "red_degenerate": self.R,
            "wall_ms": self.wall_ms,
        }


@dataclass(frozen=True)
class Partition:
    id: int
    lead: int  # a_1 for monic boxes, a_0 for general ones


@dataclass
class Tally:
    """Per-height histograms for a set of partitions."""

    ids: frozenset
    total: list[int]
    D: list[int]
    I: list[int] | None = None
    R: list[int] | None = None

    @classmethod
    def zero(cls, H_max: int, split: bool) -> "Tally":
        z = [0] * (H_max + 1)
        return cls(frozenset(), z[:], z[:], z[:] if split else None, z[:] if split else None)

    def to_json(self) -> str:
        (pid,) = self.ids
        return json.dumps({"id": pid, "total": self.total, "D": self.D, "I": self.I, "R": self.R})


def partition_box(cfg: CensusConfig) -> list[Partition]:
    """Split on the leading free coefficient; independent of the thread count."""
    cfg.validate()
    H = cfg.H_max
    if cfg.variant == "monic":
        return [Partition(i, a1) for i, a1 in enumerate(range(-H, H + 1))]
    return [Partition(i, a0) for i, a0 in enumerate(range(1, H + 1))]


def merge(tallies) -> Tally:
    tallies = list(tallies)
    if not tallies:
        raise ValueError("merge needs at least one tally")
    size = len(tallies[0].total)
    split = tallies[0].I is not None
    out = Tally.zero(size - 1, split)
    seen: set = set()
    for t in tallies:
        if len(t.total) != size or (t.I is not None) != split:
            raise ValueError("tallies have mismatched shapes")
        if seen & t.ids:
            raise ValueError(f"overlapping partition ids {sorted(seen & t.ids)}")
        seen |= t.ids
        for name in ("total", "D", "I", "R"):
            src = getattr(t, name)
            if src is None:
                continue
            dst = getattr(out, name)
            for h, v in enumerate(src):
                dst[h] += v
    out.ids = frozenset(seen)
    return out


_tables_lock = threading.Lock()
_tables_cache: dict = {}


def kernel_tables(cfg: CensusConfig) -> KernelTables:
    lead_max = 1 if cfg.variant == "monic" else cfg.H_max
    key = (cfg.n, cfg.H_max, cfg.order_mode, lead_max)
    with _tables_lock:
        t = _tables_cache.get(key)
        if t is None:
            t = KernelTables(cfg.n, cfg.H_max, cfg.order_mode, lead_max)
            _tables_cache[key] = t
    return t


def _decode(cfg: CensusConfig, part: Partition, idx: int) -> IntPoly:
    H, n = cfg.H_max, cfg.n
    base = 2 * H + 1
    nfree = n - 1 if cfg.variant == "monic" else n
    digits = []
    for _ in range(nfree):
        idx, r = divmod(idx, base)
        digits.append(r - H)
    digits.reverse()
    head = [1, part.lead] if cfg.variant == "monic" else [part.lead]
    return IntPoly(head + digits)


def defining_height(f: IntPoly, variant: str) -> int:
    if variant == "monic":
        return max((abs(c) for c in f.coeffs[1:]), default=0)
    return height(f)


def tally_partition(cfg: CensusConfig, part: Partition, tables: KernelTables | None = None) -> Tally:
    tables = tables or kernel_tables(cfg)
    H, n = cfg.H_max, cfg.n
    nfree = n - 1 if cfg.variant == "monic" else n
    status = np.zeros((2 * H + 1) ** nfree, dtype=np.uint8)
    ht = np.zeros(H + 1, dtype=np.int64)
    hd = np.zeros(H + 1, dtype=np.int64)
    run_partition(
        n, H, cfg.variant == "monic", part.lead, cfg.prefilter, DEFAULT_GAP,
        tables.kval, tables.kphi, tables.flat, tables.ord_start, tables.ord_end,
        tables.korders, tables.primes, tables.etas, tables.nprimes, status, ht, hd,
    )
    D = [int(v) for v in hd]
    I = [0] * (H + 1) if cfg.split else None
    R = [0] * (H + 1) if cfg.split else None
    for idx in np.flatnonzero(status):
        st = int(status[idx])
        if st == 1 and not cfg.split:
            continue
        f = _decode(cfg, part, int(idx))
        h = defining_height(f, cfg.variant)
        if st == 2:
            if not is_degenerate(f, cfg.order_mode).degenerate:
                continue
            D[h] += 1
        if cfg.split:
            if is_irreducible_q(f):
                I[h] += 1
            else:
                R[h] += 1
    return Tally(frozenset([part.id]), [int(v) for v in ht], D, I, R)


def _read_checkpoint(path: str, cfg: CensusConfig) -> dict[int, Tally]:
    done: dict[int, Tally] = {}
    with open(path, encoding="utf-8") as fh:
        lines = fh.read().split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        return done
    try:
        head = json.loads(lines[0])
    except json.JSONDecodeError:
        raise CheckpointError(f"{path}: unreadable header line") from None
    if head.get("format") != CHECKPOINT_FORMAT or head.get("version") != CHECKPOINT_VERSION:
        raise CheckpointError(f"{path}: not a census checkpoint")
    if head.get("config") != cfg.echo():
        raise CheckpointError(f"{path}: checkpoint config {head.get('config')} does not match {cfg.echo()}")
    size = cfg.H_max + 1
    nparts = len(partition_box(cfg))
    for lineno, line in enumerate(lines[1:], start=2):
        try:
            rec = json.loads(line)
            pid = rec["id"]
        except (json.JSONDecodeError, KeyError, TypeError):
            raise CheckpointError(f"{path}: corrupt record on line {lineno} (partition unknown)") from None
        try:
            if not isinstance(pid, int) or not 0 <= pid < nparts:
                raise ValueError
            t = Tally(frozenset([pid]), rec["total"], rec["D"], rec.get("I"), rec.get("R"))
            for name in ("total", "D") + (("I", "R") if cfg.split else ()):
                seq = getattr(t, name)
                if not isinstance(seq, list) or len(seq) != size or not all(
                    isinstance(v, int) and v >= 0 for v in seq
                ):
                    raise ValueError
            if not cfg.split and (t.I is not None or t.R is not None):
                raise ValueError
            if pid in done:
                raise ValueError
        except (KeyError, ValueError, TypeError):
            raise CheckpointError(f"{path}: corrupt record for partition {pid!r} on line {lineno}") from None
        done[pid] = t
    return done


def cumulative_records(cfg: CensusConfig, tally: Tally, wall_ms: float | None = None) -> list[CountRecord]:
    mult = 2 if cfg.variant == "general" else 1
    out = []
    tot = d = i = r = 0
    for h in range(cfg.H_max + 1):
        tot += tally.total[h]
        d += tally.D[h]
        if cfg.split:
            i += tally.I[h]
            r += tally.R[h]
        if h >= 1:
            out.append(CountRecord(
                cfg.variant, cfg.n, h, mult * tot, mult * d,
                mult * i if cfg.split else None, mult * r if cfg.split else None, wall_ms,
            ))
    return out


def run_census(
    cfg: CensusConfig, on_partition: Callable[[Partition, Tally], None] | None = None
) -> list[CountRecord]:
    """Cumulative records for H = 1..H_max."""
    cfg.validate()
    start = time.perf_counter()
    parts = partition_box(cfg)
    done: dict[int, Tally] = {}
    fh = None
    if cfg.checkpoint_path:
        path = cfg.checkpoint_path
        if os.path.exists(path) and os.path.getsize(path) > 0:
            done = _read_checkpoint(path, cfg)
            fh = open(path, "a", encoding="utf-8")
        else:
            fh = open(path, "w", encoding="utf-8")
            fh.write(json.dumps({"format": CHECKPOINT_FORMAT, "version": CHECKPOINT_VERSION,
                                 "config": cfg.echo()}) + "\n")
            fh.flush()
    todo = [p for p in parts if p.id not in done]
    tables = kernel_tables(cfg)
    lock = threading.Lock()

    def finish(part: Partition, t: Tally):
        with lock:
            done[part.id] = t
            if fh is not None:
                fh.write(t.to_json() + "\n")
                fh.flush()
        if on_partition is not None:
            on_partition(part, t)

    try:
        if cfg.threads == 1:
            for part in todo:
                finish(part, tally_partition(cfg, part, tables))
        else:
            with ThreadPoolExecutor(max_workers=cfg.threads) as pool:
                futs = {pool.submit(tally_partition, cfg, p, tables): p for p in todo}
                try:
                    for fut in as_completed(futs):
                        finish(futs[fut], fut.result())
                except BaseException:
                    for f in futs:
                        f.cancel()
                    raise
    finally:
        if fh is not None:
            fh.close()
    merged = merge(done[p.id] for p in parts)
    wall_ms = (time.perf_counter() - start) * 1000.0
    return cumulative_records(cfg, merged, wall_ms)
