from pydantic import BaseModel

from .corpus_entry import CorpusEntry


class CorpusFile(BaseModel):
    version: int = 1
    entries: list[CorpusEntry] = []
