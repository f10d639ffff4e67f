"""HTTP service exposing the solver.

Every endpoint is a thin wrapper over a plain ``handle_*`` function that maps
a request model to a response model; the command-line client calls those
functions directly when no server URL is given, so both transports share one
implementation.
"""

from __future__ import annotations

import logging
from typing import List, Optional, Tuple

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from .constructors import ConstructionError, InfeasibleListError, skolem_matching, solve
from .core import InvalidEdgeError, InvalidListError, LengthList, Matching, verify_realizes
from .feasibility import decide
from .oracle import check_conjecture, count_solutions, oracle_solve
from .skolem import SkolemError, skolem_sequence

logger = logging.getLogger("seatmatch")


class MatchingModel(BaseModel):
    v: int
    edges: List[Tuple[int, int]]

    @classmethod
    def from_matching(cls, matching: Matching) -> "MatchingModel":
        return cls(v=matching.v, edges=list(matching.edges))

    def to_matching(self) -> Matching:
        return Matching.build(self.v, [tuple(e) for e in self.edges])


class VerdictModel(BaseModel):
    status: str
    route: Optional[str] = None
    witness: Optional[str] = None


class SolveRequest(BaseModel):
    v: int = Field(gt=0)
    list: str
    allow_oracle: bool = True
    oracle_threshold: int = 28


class SolveResponse(BaseModel):
    verdict: VerdictModel
    matching: Optional[MatchingModel] = None
    route: Optional[str] = None
    verified: bool = False


class DecideRequest(BaseModel):
    v: int = Field(gt=0)
    list: str


class VerifyRequest(BaseModel):
    matching: MatchingModel
    list: str


class VerifyResponse(BaseModel):
    ok: bool
    diagnostic: Optional[str] = None


class OracleRequest(BaseModel):
    v: int = Field(gt=0)
    list: str
    count: bool = False


class OracleResponse(BaseModel):
    found: Optional[MatchingModel] = None
    count: Optional[int] = None
    nodes_expanded: int
    wall_time: float


class ConjectureRequest(BaseModel):
    p: int = Field(gt=2)
    workers: int = 1


class ConjectureResponse(BaseModel):
    p: int
    lists_checked: int
    counterexamples: List[str]
    agrees: bool


class SkolemRequest(BaseModel):
    n: int = Field(gt=0)


class SkolemResponse(BaseModel):
    n: int
    matching: MatchingModel
    sequence: List[int]


class ServiceError(ValueError):
    """Invalid request content (maps to HTTP 422)."""


def _parse_list(text: str, v: int) -> LengthList:
    if v % 2:
        raise ServiceError(f"v={v} must be even")
    try:
        lst = LengthList.parse(text, v // 2)
    except InvalidListError as exc:
        raise ServiceError(str(exc)) from exc
    if not lst.is_instance_of(v):
        raise ServiceError(
            f"list has {lst.total} entries; K_{v} needs {v // 2}")
    return lst


def handle_solve(req: SolveRequest) -> SolveResponse:
    lst = _parse_list(req.list, req.v)
    logger.info("solve v=%d list=%s", req.v, lst.format())
    outcome = solve(lst, req.v, allow_oracle=req.allow_oracle,
                    oracle_threshold=req.oracle_threshold)
    verdict = VerdictModel(**outcome.verdict.to_dict())
    if outcome.report is None:
        return SolveResponse(verdict=verdict)
    return SolveResponse(
        verdict=verdict,
        matching=MatchingModel.from_matching(outcome.report.matching),
        route=outcome.report.route,
        verified=outcome.report.verified,
    )


def handle_decide(req: DecideRequest) -> VerdictModel:
    lst = _parse_list(req.list, req.v)
    logger.info("decide v=%d list=%s", req.v, lst.format())
    return VerdictModel(**decide(lst, req.v).to_dict())


def handle_verify(req: VerifyRequest) -> VerifyResponse:
    try:
        matching = req.matching.to_matching()
    except InvalidEdgeError as exc:
        return VerifyResponse(ok=False, diagnostic=str(exc))
    try:
        # n inferred from the entry count; an order mismatch with the
        # matching is then reported by verify_realizes, not as a bad request
        target = LengthList.parse(req.list)
    except InvalidListError as exc:
        raise ServiceError(str(exc)) from exc
    ok, diagnostic = verify_realizes(matching, target)
    return VerifyResponse(ok=ok, diagnostic=diagnostic)


def handle_oracle(req: OracleRequest) -> OracleResponse:
    lst = _parse_list(req.list, req.v)
    logger.info("oracle v=%d list=%s count=%s", req.v, lst.format(), req.count)
    if req.count:
        found_count, stats = count_solutions(lst, req.v)
        return OracleResponse(count=found_count, nodes_expanded=stats.nodes_expanded,
                              wall_time=stats.wall_time)
    found, stats = oracle_solve(lst, req.v)
    model = MatchingModel.from_matching(found) if found is not None else None
    return OracleResponse(found=model, nodes_expanded=stats.nodes_expanded,
                          wall_time=stats.wall_time)


def handle_conjecture(req: ConjectureRequest) -> ConjectureResponse:
    logger.info("conjecture p=%d workers=%d", req.p, req.workers)
    report = check_conjecture(req.p, workers=req.workers)
    return ConjectureResponse(**report.to_dict())


def handle_skolem(req: SkolemRequest) -> SkolemResponse:
    try:
        matching = skolem_matching(req.n)
        sequence = skolem_sequence(req.n)
    except (SkolemError, InfeasibleListError) as exc:
        raise ServiceError(str(exc)) from exc
    return SkolemResponse(n=req.n,
                          matching=MatchingModel.from_matching(matching),
                          sequence=sequence)


app = FastAPI(title="seatmatch", description="Perfect matchings of K_2n with "
              "prescribed circular edge lengths")


def _wrap(handler, req):
    try:
        return handler(req)
    except ServiceError as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    except ConstructionError as exc:  # pragma: no cover - internal bug guard
        raise HTTPException(status_code=500, detail=str(exc))


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/solve", response_model=SolveResponse)
def solve_endpoint(req: SolveRequest) -> SolveResponse:
    return _wrap(handle_solve, req)


@app.post("/decide", response_model=VerdictModel)
def decide_endpoint(req: DecideRequest) -> VerdictModel:
    return _wrap(handle_decide, req)


@app.post("/verify", response_model=VerifyResponse)
def verify_endpoint(req: VerifyRequest) -> VerifyResponse:
    return _wrap(handle_verify, req)


@app.post("/oracle", response_model=OracleResponse)
def oracle_endpoint(req: OracleRequest) -> OracleResponse:
    return _wrap(handle_oracle, req)


@app.post("/conjecture", response_model=ConjectureResponse)
def conjecture_endpoint(req: ConjectureRequest) -> ConjectureResponse:
    return _wrap(handle_conjecture, req)


@app.post("/skolem", response_model=SkolemResponse)
def skolem_endpoint(req: SkolemRequest) -> SkolemResponse:
    return _wrap(handle_skolem, req)
