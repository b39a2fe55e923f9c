from pydantic import BaseModel


class ProbeReport(BaseModel):
    ell: int
    bound: int
    found: int | None = None
