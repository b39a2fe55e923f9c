from pydantic import BaseModel, computed_field

from .entry_result import EntryResult, EntryStatus


class CorpusReport(BaseModel):
    """Results in corpus order."""

    entries: list[EntryResult] = []

    @computed_field  # type: ignore[prop-decorator]
    @property
    def summary(self) -> dict[str, int]:
        counts = {status.value: 0 for status in EntryStatus}
        for entry in self.entries:
            counts[entry.status.value] += 1
        return counts

    @property
    def ok(self) -> bool:
        return all(entry.status != EntryStatus.FAIL for entry in self.entries)
