from typing import Literal

from pydantic import BaseModel

from ..lattice import Mod3Label
from .probe_report import ProbeReport


class Evidence(BaseModel):
    factorization_type: list[int]
    quartic_group: str | None = None
    probe: ProbeReport | None = None


class ClassificationReport(BaseModel):
    curve: str
    label: Mod3Label
    qualifier: Literal["exact", "probable"]
    evidence: Evidence
