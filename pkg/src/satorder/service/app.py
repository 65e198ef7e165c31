"""FastAPI application wrapping the core package.

Every endpoint takes a poset payload (strict generating pairs), closes it
server-side, and returns plain JSON.  Domain errors surface as 422 responses
with an ``{"error": ..., "message": ...}`` detail, so thin clients can map
them straight to diagnostics.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..errors import SatOrderError, TooLarge
from ..fileio import to_dot
from ..posets import Poset, generate
from ..representations import (
    SaturationVerdict,
    SetRepresentation,
    enumerate_parsimonious,
    is_saturated_oracle,
    new_point_map,
)
from ..saturation import (
    Bouquet,
    canonical_pairs,
    is_saturated_exhaustive,
    is_saturated_fast,
    merging_representation,
)
from ..interval import interval_representation
from ..verify import CampaignConfig, campaign
from .models import (
    BouquetModel,
    CampaignRequest,
    CampaignResponse,
    CampaignMismatchModel,
    CampaignRowModel,
    CheckRequest,
    CheckResponse,
    DotRequest,
    DotResponse,
    GenerateRequest,
    NewPointMapModel,
    PosetModel,
    PosetPayload,
    RepresentationModel,
    RepsRequest,
    RepsResponse,
    WitnessRequest,
    WitnessResponse,
)

REPS_GUARD = 10

CHECKERS = {
    "fast": is_saturated_fast,
    "exhaustive": is_saturated_exhaustive,
    "oracle": is_saturated_oracle,
}


def _build(payload: PosetPayload) -> Poset:
    return Poset.from_strict_pairs(payload.n, payload.strict)


def _bouquet_model(b: Bouquet) -> BouquetModel:
    return BouquetModel(members=sorted(b.members), top=b.top)


def _rep_model(P: Poset, rep: SetRepresentation) -> RepresentationModel:
    return RepresentationModel(
        ground_size=rep.ground_size,
        sets=[sorted(s) for s in rep.sets],
        new_points=list(new_point_map(P, rep).values),
    )


def create_app() -> FastAPI:
    app = FastAPI(title="satorder service", version=__version__)

    @app.exception_handler(SatOrderError)
    async def _domain_error(_request: Request, exc: SatOrderError):
        return JSONResponse(
            status_code=422,
            content={"detail": {"error": type(exc).__name__, "message": str(exc)}},
        )

    @app.get("/health")
    def health():
        return {"status": "ok", "version": __version__}

    @app.post("/poset/validate", response_model=PosetModel)
    def validate(payload: PosetPayload):
        P = _build(payload)
        return PosetModel(n=P.n, strict=P.hasse_edges(), names=payload.names)

    @app.post("/generate", response_model=PosetModel)
    def generate_poset(req: GenerateRequest):
        try:
            P, names = generate(req.kind, n=req.n, k=req.k, density=req.density, seed=req.seed)
        except ValueError as exc:
            return JSONResponse(
                status_code=422,
                content={"detail": {"error": "BadParameters", "message": str(exc)}},
            )
        return PosetModel(n=P.n, strict=P.hasse_edges(), names=list(names) if names else None)

    @app.post("/check", response_model=CheckResponse)
    def check(req: CheckRequest):
        P = _build(req.poset)
        verdict: SaturationVerdict = CHECKERS[req.method](P)
        resp = CheckResponse(saturated=verdict.saturated, method=req.method)
        if verdict.witness_bouquets is not None:
            b0, b1 = verdict.witness_bouquets
            resp.witness_bouquets = (_bouquet_model(b0), _bouquet_model(b1))
        if verdict.witness_new_points is not None:
            resp.witness_new_points = list(verdict.witness_new_points.values)
        if verdict.witness_representation is not None:
            resp.witness_representation = _rep_model(P, verdict.witness_representation)
        return resp

    @app.post("/witness", response_model=WitnessResponse)
    def witness(req: WitnessRequest):
        P = _build(req.poset)
        verdict = is_saturated_fast(P)
        if not verdict.saturated:
            b0, b1 = verdict.witness_bouquets
            rep = merging_representation(P, b0, b1)
            return WitnessResponse(
                saturated=False,
                bouquets=(_bouquet_model(b0), _bouquet_model(b1)),
                merging=_rep_model(P, rep),
                merged_point=P.n,
            )
        two_two = P.find_two_two()
        intervals = None
        if two_two is None:
            intervals = list(interval_representation(P).intervals)
        return WitnessResponse(
            saturated=True,
            two_plus_two=tuple(two_two) if two_two else None,
            intervals=intervals,
            canonical_pairs_topped=sum(1 for _ in canonical_pairs(P)),
        )

    @app.post("/reps", response_model=RepsResponse)
    def reps(req: RepsRequest):
        P = _build(req.poset)
        if P.n > REPS_GUARD:
            raise TooLarge(f"representation listing guarded at n <= {REPS_GUARD}")
        maps = [
            NewPointMapModel(values=list(m.values), injective=m.injective)
            for m in enumerate_parsimonious(P)
        ]
        return RepsResponse(count=len(maps), maps=maps)

    @app.post("/campaign", response_model=CampaignResponse)
    def run_campaign(req: CampaignRequest):
        try:
            config = CampaignConfig(
                n_max=req.n_max,
                exhaustive_limit=min(req.exhaustive_limit, req.n_max),
                samples_per_n=req.samples_per_n,
                seed=req.seed,
            )
        except ValueError as exc:
            return JSONResponse(
                status_code=422,
                content={"detail": {"error": "BadParameters", "message": str(exc)}},
            )
        report = campaign(config)
        return CampaignResponse(
            rows=[
                CampaignRowModel(
                    n=r.n,
                    mode=r.mode,
                    posets=r.posets,
                    saturated=r.saturated,
                    interval_orders=r.interval_orders,
                    saturated_with_two_plus_two=r.saturated_with_two_plus_two,
                )
                for r in report.rows
            ],
            mismatches=[
                CampaignMismatchModel(n=m.n, strict=list(m.strict), reasons=list(m.reasons))
                for m in report.mismatches
            ],
            text=report.to_text(),
            json_text=report.to_json_text(),
        )

    @app.post("/export/dot", response_model=DotResponse)
    def export_dot(req: DotRequest):
        P = _build(req.poset)
        return DotResponse(dot=to_dot(P.n, P.hasse_edges(), req.poset.names))

    return app


app = create_app()
