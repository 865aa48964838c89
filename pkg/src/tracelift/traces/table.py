#  Copyright (c) 2024. Davi Pereira dos Santos
#  This file is part of the tracelift project.
#  Please respect the license - more about this in the section (*) below.
#
#  tracelift is free software: you can redistribute it and/or modify
#  it under the terms of the GNU General Public License as published by
#  the Free Software Foundation, either version 3 of the License, or
#  (at your option) any later version.
#
#  tracelift is distributed in the hope that it will be useful,
#  but WITHOUT ANY WARRANTY; without even the implied warranty of
#  MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#  GNU General Public License for more details.
#
#  You should have received a copy of the GNU General Public License
#  along with tracelift.  If not, see <http://www.gnu.org/licenses/>.
#
#  (*) Removing authorship by any means, e.g. by distribution of derived
#  works or verbatim, obfuscated, compiled or rewritten versions of any
#  part of this work is illegal and it is unethical regarding the effort and
#  time spent here.
#

"""
Persistent table of traces

Keys are (kind, F, disc) with kind "cm" (D < 0) or "cycle" (D > 0 nonsquare) and F ∈ {"one", "J", "J<m>"}.
Values are kept as their 18 significant digit decimal text, so a table reloads exactly as it was saved.
"""
import json
import logging
import threading
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from itertools import repeat
from pathlib import Path

import mpmath
from hosh import ø
from pandas import DataFrame

from tracelift.errors import CacheError, DomainError
from tracelift.persistence import Stored, key2hosh
from tracelift.qforms import check_disc
from tracelift.text import decimal
from tracelift.traces.trace import DEFAULT_DPS, DEFAULT_TOL, F_index, F_name, compute_entry

log = logging.getLogger(__name__)

SCHEMA = 1
PARSE_DPS = 20
COLUMNS = ["kind", "F", "disc", "value", "abs_err", "provenance", "id"]
ERR_BOUND = 1e-6
LOW_PRECISION = "low-precision"


@dataclass(frozen=True, order=True)
class TraceKey:
    """
    >>> TraceKey("cycle", "J1", 5)
    cycle:J:5
    >>> TraceKey("cm", "J", 5)
    Traceback (most recent call last):
    ...
    tracelift.errors.DomainError: cm traces need D < 0, not 5.
    """

    kind: str
    F: str
    disc: int

    def __post_init__(self):
        object.__setattr__(self, "F", F_name(F_index(self.F)))
        object.__setattr__(self, "disc", int(self.disc))
        match self.kind:
            case "cm" if self.disc >= 0:
                raise DomainError(f"cm traces need D < 0, not {self.disc}.")
            case "cycle" if self.disc <= 0:
                raise DomainError(f"cycle traces need D > 0, not {self.disc}.")
            case "cm" | "cycle":
                check_disc(self.disc)
            case _:
                raise DomainError(f"Unknown trace kind {self.kind!r}.\nHint: use 'cm' or 'cycle'.")

    def __repr__(self):
        return f"{self.kind}:{self.F}:{self.disc}"

    @property
    def m(self):
        return F_index(self.F)

    @property
    def hosh(self):
        return key2hosh(self.kind, self.F, self.disc)


@dataclass(frozen=True, repr=False)
class TraceEntry:
    """
    A trace value with its error bound and how it was obtained

    >>> e = TraceEntry(TraceKey("cm", "J", -3), mpmath.mpf(-248), 1e-9, "cm:tol=1e-09")
    >>> e.asdict()["value"], e.abs_err, len(e.id)
    ('-248.0', 1e-09, 40)
    """

    key: TraceKey
    value: mpmath.mpf
    abs_err: float
    provenance: str = field(default="", compare=False)

    def __post_init__(self):
        with mpmath.workdps(PARSE_DPS):
            object.__setattr__(self, "value", mpmath.mpf(decimal(self.value)))
        object.__setattr__(self, "abs_err", float(self.abs_err))

    def __repr__(self):
        return f"{self.key} = {decimal(self.value)} ± {self.abs_err:.1e}"

    @property
    def low_precision(self):
        return self.provenance.endswith(LOW_PRECISION)

    @property
    def hosh(self):
        return self.key.hosh

    @property
    def id(self):
        return self.hosh.id

    def asdict(self):
        k = self.key
        return {"kind": k.kind, "F": k.F, "disc": k.disc, "value": decimal(self.value), "abs_err": self.abs_err, "provenance": self.provenance, "id": self.id}

    @classmethod
    def fromdict(cls, d: dict):
        key = TraceKey(d["kind"], d["F"], d["disc"])
        with mpmath.workdps(PARSE_DPS):
            value = mpmath.mpf(d["value"])
        entry = cls(key, value, d["abs_err"], d.get("provenance", ""))
        if "id" in d and d["id"] != entry.id:
            raise CacheError(f"Entry {key} carries id {d['id']}, but its key gives {entry.id}.\nHint: the cache file was edited or is corrupt; delete it to recompute.")
        return entry


class TraceTable:
    """
    Map (kind, F, disc) → TraceEntry, computing missing entries on demand

    Reads are concurrent; computations are serialized (mpmath precision is process-wide) and an in-flight registry
    makes concurrent requests for the same key wait for a single computation.

    >>> t = TraceTable()
    >>> mpmath.nstr(t.value("cm", "J", -3), 10), len(t)
    ('-248.0', 1)
    >>> t2 = TraceTable([t.entry("cm", "J", -3)])
    >>> t2.id == t.id, TraceTable().id == ø.id
    (True, True)
    >>> storage = {}
    >>> t.save(storage)
    >>> TraceTable.fetch(t.id, storage).entries == t.entries
    True
    """

    def __init__(self, entries=(), path=None, tol=DEFAULT_TOL, dps: int = DEFAULT_DPS, method: str = "trapezoid"):
        self.path, self.tol, self.dps, self.method = path, tol, dps, method
        self._entries: dict[TraceKey, TraceEntry] = {}
        self._lock = threading.Lock()
        self._compute = threading.Lock()
        self._inflight: dict[TraceKey, threading.Event] = {}
        for e in entries:
            self.put(e)

    def __getstate__(self):
        state = self.__dict__.copy()
        for k in ["_lock", "_compute", "_inflight"]:
            del state[k]
        return state

    def __setstate__(self, state):
        self.__dict__.update(state)
        self._lock, self._compute, self._inflight = threading.Lock(), threading.Lock(), {}

    def __len__(self):
        return len(self._entries)

    def __contains__(self, key):
        return key in self._entries

    def __iter__(self):
        return iter(self.entries)

    def __repr__(self):
        return f"TraceTable({len(self)} entries, id={self.id})"

    @property
    def entries(self) -> list[TraceEntry]:
        """Entries sorted by (kind, F, disc)"""
        with self._lock:
            return [self._entries[k] for k in sorted(self._entries)]

    @property
    def hosh(self):
        """Commutative combination of the entry identities"""
        h = ø
        for e in self.entries:
            h += e.hosh
        return h

    @property
    def id(self):
        return self.hosh.id

    def get(self, key: TraceKey) -> TraceEntry | None:
        with self._lock:
            return self._entries.get(key)

    def put(self, entry: TraceEntry):
        """
        Entries whose abs_err exceeds ERR_BOUND are kept, flagged as lower precision in their provenance

        >>> t = TraceTable()
        >>> t.put(TraceEntry(TraceKey("cm", "one", -3), mpmath.mpf(1) / 3, 1e-3, "cm:tol=0.001"))
        >>> t.get(TraceKey("cm", "one", -3)).provenance
        'cm:tol=0.001;low-precision'
        """
        if entry.abs_err > ERR_BOUND and not entry.low_precision:
            log.warning(f"{entry.key} has abs_err {entry.abs_err:.1e} > {ERR_BOUND:.0e}; stored as {LOW_PRECISION}")
            entry = replace(entry, provenance=f"{entry.provenance};{LOW_PRECISION}")
        with self._lock:
            self._entries[entry.key] = entry

    def entry(self, kind: str, F: str, disc: int) -> TraceEntry:
        """The entry of a key, computed and stored when missing"""
        key = TraceKey(kind, F, disc)
        while True:
            with self._lock:
                if key in self._entries:
                    return self._entries[key]
                event = self._inflight.get(key)
                owner = event is None
                if owner:
                    event = self._inflight[key] = threading.Event()
            if owner:
                break
            event.wait()
        try:
            with self._compute:
                entry = compute_entry(key, self.tol, self.dps, self.method)
            self.put(entry)
            return entry
        finally:
            with self._lock:
                self._inflight.pop(key).set()

    def value(self, kind: str, F: str, disc: int):
        return self.entry(kind, F, disc).value

    def ensure(self, keys, threads: int = 1):
        """
        Compute every missing key; with threads > 1 distinct keys go to a process pool

        Entries are inserted in key order whatever the completion order.

        >>> t = TraceTable()
        >>> t.ensure([TraceKey("cm", "one", -4), TraceKey("cm", "one", -3)])
        >>> t.entries
        [cm:one:-4 = 0.5 ± 1.0e-09, cm:one:-3 = 0.333333333333333315 ± 1.0e-09]
        """
        missing = sorted({k for k in keys if k not in self})
        if not missing:
            return
        if threads > 1 and len(missing) > 1:
            log.info(f"Computing {len(missing)} traces with {threads} processes")
            with ProcessPoolExecutor(max_workers=threads) as pool:
                computed = list(pool.map(compute_entry, missing, repeat(self.tol), repeat(self.dps), repeat(self.method)))
            for e in computed:
                self.put(e)
        else:
            for k in missing:
                self.entry(k.kind, k.F, k.disc)

    def asdict(self):
        return {"schema": SCHEMA, "id": self.id, "entries": [e.asdict() for e in self.entries]}

    def to_json(self) -> str:
        return json.dumps(self.asdict(), indent=2, ensure_ascii=False)

    def dataframe(self) -> DataFrame:
        """
        >>> TraceTable([TraceEntry(TraceKey("cm", "J", -4), 492, 1e-9, "given")]).dataframe()[["kind", "F", "disc", "value"]]
           kind  F  disc  value
        0    cm  J    -4  492.0
        """
        return DataFrame([e.asdict() for e in self.entries], columns=COLUMNS)

    def to_csv(self, path=None):
        return self.dataframe().to_csv(path, index=False)

    def save(self, target=None):
        """
        Write the table as JSON to a path, or as `Stored` entries into a dict-like storage

        >>> from testfixtures import TempDirectory
        >>> t = TraceTable([TraceEntry(TraceKey("cycle", "one", 5), mpmath.mpf("0.86081788"), 1e-12, "given")])
        >>> with TempDirectory() as tmp:
        ...    t.save(tmp.path + "/traces.json")
        ...    t2 = TraceTable.load(tmp.path + "/traces.json")
        >>> t2.entries == t.entries, t2.id == t.id
        (True, True)
        """
        target = self.path if target is None else target
        match target:
            case None:
                raise CacheError("No cache path was given.\nHint: pass a path or set TRACELIFT_CACHE.")
            case str() | Path():
                Path(target).write_text(self.to_json())
                log.info(f"Saved {len(self)} traces to {target}")
            case _:
                data = {self.id: {e.id: repr(e.key) for e in self.entries}}
                for e in self.entries:
                    data[e.id] = Stored(e.asdict())
                target.update(data)

    @staticmethod
    def load(path, **kwargs) -> "TraceTable":
        """Read a table written by `save`; a missing file gives an empty table bound to that path"""
        p = Path(path)
        if not p.exists():
            return TraceTable(path=path, **kwargs)
        try:
            data = json.loads(p.read_text())
        except json.JSONDecodeError as e:
            raise CacheError(f"Unreadable cache {path}: {e}.\nHint: delete it to recompute.")
        if data.get("schema") != SCHEMA:
            raise CacheError(f"Cache {path} has schema {data.get('schema')}, not {SCHEMA}.\nHint: delete it to recompute.")
        table = TraceTable([TraceEntry.fromdict(d) for d in data["entries"]], path=path, **kwargs)
        if data.get("id") != table.id:
            raise CacheError(f"Cache {path} claims id {data.get('id')}, but its entries give {table.id}.")
        log.info(f"Loaded {len(table)} traces from {path}")
        return table

    @staticmethod
    def fetch(id: str, storage: dict, **kwargs) -> "TraceTable | None":
        """Table saved under `id` into a dict-like storage, or None"""
        if id not in storage:
            return None
        entries = []
        for eid in storage[id]:
            obj = storage[eid]
            if not isinstance(obj, Stored):  # pragma: no cover
                raise CacheError(f"Wrong content under id {eid}: {type(obj)}.")
            entries.append(TraceEntry.fromdict(obj.content))
        return TraceTable(entries, **kwargs)
