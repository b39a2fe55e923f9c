"""
Conjugacy classes of subgroups of GL2(F3) that can occur as mod-3 images.

Each label stores generators as 2x2 matrices over F3 together with its order and two
flags. `closure` recomputes the group from the generators so the flags can be checked.
"""

from dataclasses import dataclass
from enum import Enum
from functools import cache
from itertools import product

Matrix2 = tuple[tuple[int, int], tuple[int, int]]

IDENTITY: Matrix2 = ((1, 0), (0, 1))
MINUS_ID: Matrix2 = ((2, 0), (0, 2))


def mat_mul(a: Matrix2, b: Matrix2) -> Matrix2:
    return (
        ((a[0][0] * b[0][0] + a[0][1] * b[1][0]) % 3, (a[0][0] * b[0][1] + a[0][1] * b[1][1]) % 3),
        ((a[1][0] * b[0][0] + a[1][1] * b[1][0]) % 3, (a[1][0] * b[0][1] + a[1][1] * b[1][1]) % 3),
    )


def det(a: Matrix2) -> int:
    return (a[0][0] * a[1][1] - a[0][1] * a[1][0]) % 3


def mat_inv(a: Matrix2) -> Matrix2:
    d = det(a)  # 1 and 2 are their own inverses mod 3
    return ((a[1][1] * d % 3, -a[0][1] * d % 3), (-a[1][0] * d % 3, a[0][0] * d % 3))


@cache
def general_linear_group() -> frozenset[Matrix2]:
    return frozenset(
        ((a, b), (c, d)) for a, b, c, d in product(range(3), repeat=4) if (a * d - b * c) % 3
    )


def closure(generators: tuple[Matrix2, ...]) -> frozenset[Matrix2]:
    """The subgroup generated by `generators` (finite group: products suffice)."""
    group = {IDENTITY}
    frontier = [IDENTITY]
    while frontier:
        element = frontier.pop()
        for g in generators:
            new = mat_mul(element, g)
            if new not in group:
                group.add(new)
                frontier.append(new)
    return frozenset(group)


@dataclass(frozen=True)
class LabelData:
    order: int
    contains_minus_id: bool
    inside_sl2: bool
    generators: tuple[Matrix2, ...]


_T: Matrix2 = ((1, 1), (0, 1))
_L: Matrix2 = ((1, 0), (1, 1))
_D1: Matrix2 = ((2, 0), (0, 1))
_D2: Matrix2 = ((1, 0), (0, 2))
_C8: Matrix2 = ((1, 2), (1, 1))
_C4: Matrix2 = ((0, 1), (2, 0))


class Mod3Label(str, Enum):
    GL2F3 = "GL2F3"
    SD16 = "SD16"
    C8 = "C8"
    SL2F3 = "SL2F3"
    Q8 = "Q8"
    D12 = "D12"
    D8 = "D8"
    C6 = "C6"
    S3_Borel = "S3_Borel"
    C4 = "C4"
    V4 = "V4"
    C3 = "C3"
    TwoC2 = "TwoC2"
    OneC2 = "OneC2"
    C1 = "C1"

    @property
    def data(self) -> LabelData:
        return LATTICE[self]

    @property
    def order(self) -> int:
        return self.data.order

    @property
    def contains_minus_id(self) -> bool:
        return self.data.contains_minus_id

    @property
    def inside_sl2(self) -> bool:
        return self.data.inside_sl2

    @property
    def generators(self) -> tuple[Matrix2, ...]:
        return self.data.generators

    def group(self) -> frozenset[Matrix2]:
        return closure(self.generators)

    def is_subgroup_of(self, other: "Mod3Label") -> bool:
        """Whether some conjugate of this group lies inside `other`."""
        small, big = self.group(), other.group()
        for g in general_linear_group():
            g_inv = mat_inv(g)
            if all(mat_mul(mat_mul(g, h), g_inv) in big for h in small):
                return True
        return False


LATTICE: dict[Mod3Label, LabelData] = {
    Mod3Label.GL2F3: LabelData(48, True, False, (_D1, _T, _L)),
    Mod3Label.SD16: LabelData(16, True, False, (_C8, _D2)),
    Mod3Label.C8: LabelData(8, True, False, (_C8,)),
    Mod3Label.SL2F3: LabelData(24, True, True, (_T, _L)),
    Mod3Label.Q8: LabelData(8, True, True, (_C4, ((1, 1), (1, 2)))),
    Mod3Label.D12: LabelData(12, True, False, (_T, _D1, _D2)),
    Mod3Label.D8: LabelData(8, True, False, (_D1, ((0, 1), (1, 0)))),
    Mod3Label.C6: LabelData(6, True, True, (((2, 2), (0, 2)),)),
    Mod3Label.S3_Borel: LabelData(6, False, False, (_T, _D2)),
    Mod3Label.C4: LabelData(4, True, True, (_C4,)),
    Mod3Label.V4: LabelData(4, True, False, (_D1, _D2)),
    Mod3Label.C3: LabelData(3, False, True, (_T,)),
    Mod3Label.TwoC2: LabelData(2, False, False, (_D2,)),
    Mod3Label.OneC2: LabelData(2, True, True, (MINUS_ID,)),
    Mod3Label.C1: LabelData(1, False, True, ()),
}
