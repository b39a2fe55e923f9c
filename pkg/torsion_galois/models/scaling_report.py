from pydantic import BaseModel


class ScalingReport(BaseModel):
    """p-adic valuations of the scaled chi, lowest degree first; None marks a zero coefficient."""

    curve: str
    p: int
    m: int
    n: int
    ok: bool
    required: list[int]
    valuations: list[int | None]
