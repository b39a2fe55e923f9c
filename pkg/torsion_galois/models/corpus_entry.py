from typing import Literal

from pydantic import BaseModel

from ..lattice import Mod3Label
from .entry_kind import EntryKind


class CorpusEntry(BaseModel):
    """
    One check of the golden corpus.

    Only the fields relevant to `kind` are read; `provenance` says where the expected
    value comes from.
    """

    name: str
    kind: EntryKind
    curve: str
    u: str = "1,0,0"
    n: int = 3
    method: Literal["matrix", "resultant", "both"] = "resultant"
    golden: str | None = None
    errata: list[int] = []
    label: Mod3Label | None = None
    qualifier: Literal["exact", "probable"] | None = None
    ell: int | None = None
    bound: int | None = None
    found: int | None = None
    attained: bool | None = None
    p: int | None = None
    m: int | None = None
    limit: int | None = None
    tolerance: float | None = None
    provenance: str = ""
    slow: bool = False

    model_config = {"extra": "forbid"}
