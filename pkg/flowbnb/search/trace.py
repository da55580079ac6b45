"""
Optional structured trace of engine events (spawn, steal, spill, incumbent)
"""

import json
import threading
import time
from typing import Any, Dict, List, Optional


class TraceRecorder:
    """
    Collects one record per engine event. Records are written as JSON lines
    to `path` when given, otherwise kept in memory.
    """

    def __init__(self, path: Optional[str] = None):
        self.path = path
        self.events: List[Dict[str, Any]] = []
        self._lock = threading.Lock()
        self._start = time.perf_counter()
        self._file = open(path, "w", encoding="utf-8") if path else None

    def emit(self, event: str, worker: int, **fields: Any) -> None:
        record = {"t": round(time.perf_counter() - self._start, 6), "event": event, "worker": worker}
        record.update(fields)
        with self._lock:
            if self._file is not None:
                self._file.write(json.dumps(record) + "\n")
            else:
                self.events.append(record)

    def of_kind(self, event: str) -> List[Dict[str, Any]]:
        with self._lock:
            return [e for e in self.events if e["event"] == event]

    @property
    def closed(self) -> bool:
        return self.path is not None and self._file is None

    def close(self) -> None:
        with self._lock:
            if self._file is not None:
                self._file.close()
                self._file = None
