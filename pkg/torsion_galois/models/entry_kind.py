from enum import Enum


class EntryKind(str, Enum):
    """What a corpus entry checks"""

    CHARPOLY = "charpoly"
    DUAL_ROUTE = "dual_route"
    CLASSIFY = "classify"
    VALUATION = "valuation"
    MINUS_ID = "minus_id"
    SCALING = "scaling"
    DEGREE = "degree"
    NUMERIC = "numeric"
