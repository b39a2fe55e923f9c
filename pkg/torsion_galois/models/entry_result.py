from enum import Enum

from pydantic import BaseModel

from .entry_kind import EntryKind


class EntryStatus(str, Enum):
    PASS = "pass"
    ERRATUM = "erratum"
    FAIL = "fail"
    SKIPPED = "skipped"


class EntryResult(BaseModel):
    name: str
    kind: EntryKind
    status: EntryStatus
    detail: str = ""
    mismatches: list[int] = []
    timings: dict[str, float] | None = None
