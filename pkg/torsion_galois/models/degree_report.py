from pydantic import BaseModel


class DegreeGroup(BaseModel):
    degree: int
    orders: list[int]


class DegreeReport(BaseModel):
    limit: int
    groups: list[DegreeGroup] = []
