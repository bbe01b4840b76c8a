"""HTTP query service: build an index once, answer rotation queries many
times from any number of clients.

Indexes live in an in-memory registry keyed by id; intersectors are built
lazily per method and cached alongside the index.
"""

from __future__ import annotations

import itertools

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import errors
from .engine import ecpm
from .index import SuffixIndex, build_index
from .intersect import DEFAULT_INSTANT_CAP, KINDS, Intersector, build_intersector
from .text import Text, load_fasta, load_plain, random_dna


class RandomSource(BaseModel):
    length: int = Field(gt=0)
    seed: int = 0


class FastaSource(BaseModel):
    path: str
    record: int = 0


class IndexRequest(BaseModel):
    literal: str | None = None
    path: str | None = None
    fasta: FastaSource | None = None
    random: RandomSource | None = None
    strip_newlines: bool = False


class IndexInfo(BaseModel):
    index_id: int
    n: int
    alphabet_size: int
    methods_built: list[str]


class QueryRequest(BaseModel):
    pattern: str = Field(min_length=1)
    method: str = "inverse"
    dedup: bool = False
    instant_cap: int = DEFAULT_INSTANT_CAP


class OccurrenceOut(BaseModel):
    start: int
    rotation: int


class QueryResponse(BaseModel):
    occurrences: list[OccurrenceOut]
    count: int


class _Entry:
    def __init__(self, index: SuffixIndex):
        self.index = index
        self.intersectors: dict[str, Intersector] = {}


_registry: dict[int, _Entry] = {}
_ids = itertools.count(1)

app = FastAPI(title="cpmx", description="circular pattern matching service")


def _load_text(req: IndexRequest) -> Text:
    sources = [req.literal, req.path, req.fasta, req.random]
    if sum(s is not None for s in sources) != 1:
        raise HTTPException(422, "exactly one of literal/path/fasta/random required")
    if req.literal is not None:
        return Text(req.literal.encode())
    if req.path is not None:
        return load_plain(req.path, strip_newlines=req.strip_newlines)
    if req.fasta is not None:
        return load_fasta(req.fasta.path, req.fasta.record)
    return random_dna(req.random.length, req.random.seed)


def _entry(index_id: int) -> _Entry:
    entry = _registry.get(index_id)
    if entry is None:
        raise HTTPException(404, f"no index with id {index_id}")
    return entry


def _info(index_id: int, entry: _Entry) -> IndexInfo:
    return IndexInfo(
        index_id=index_id,
        n=entry.index.n,
        alphabet_size=len(entry.index.text.alphabet),
        methods_built=sorted(entry.intersectors),
    )


@app.post("/indexes", response_model=IndexInfo)
def create_index(req: IndexRequest) -> IndexInfo:
    try:
        text = _load_text(req)
    except (errors.EmptyText, errors.InvalidSymbol, errors.ParseError) as exc:
        raise HTTPException(400, str(exc))
    except errors.NoSuchRecord as exc:
        raise HTTPException(404, str(exc))
    except FileNotFoundError as exc:
        raise HTTPException(404, str(exc))
    index_id = next(_ids)
    _registry[index_id] = _Entry(build_index(text))
    return _info(index_id, _registry[index_id])


@app.get("/indexes", response_model=list[IndexInfo])
def list_indexes() -> list[IndexInfo]:
    return [_info(i, e) for i, e in sorted(_registry.items())]


@app.get("/indexes/{index_id}", response_model=IndexInfo)
def get_index(index_id: int) -> IndexInfo:
    return _info(index_id, _entry(index_id))


@app.delete("/indexes/{index_id}")
def delete_index(index_id: int) -> dict:
    _entry(index_id)
    del _registry[index_id]
    return {"deleted": index_id}


@app.post("/indexes/{index_id}/query", response_model=QueryResponse)
def query_index(index_id: int, req: QueryRequest) -> QueryResponse:
    entry = _entry(index_id)
    if req.method not in KINDS:
        raise HTTPException(422, f"unknown method {req.method!r}; choose from {KINDS}")
    intersector = entry.intersectors.get(req.method)
    if intersector is None:
        try:
            intersector = build_intersector(
                req.method, entry.index, instant_cap=req.instant_cap
            )
        except errors.TooLargeForInstant as exc:
            raise HTTPException(413, str(exc))
        entry.intersectors[req.method] = intersector
    try:
        occs = ecpm(entry.index, intersector, req.pattern.encode(), dedup=req.dedup)
    except (errors.PatternTooLong, errors.EmptyPattern, errors.InvalidSymbol) as exc:
        raise HTTPException(400, str(exc))
    return QueryResponse(
        occurrences=[OccurrenceOut(start=o.start, rotation=o.rotation) for o in occs],
        count=len(occs),
    )
