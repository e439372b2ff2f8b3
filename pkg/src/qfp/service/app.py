"""FastAPI service wrapping the fingerprinting toolkit.

Every endpoint is a pure function of its request body, so responses are
reproducible byte-for-byte; the simulate endpoint in particular is
deterministic in (seed, configuration) regardless of the worker count.
"""

from __future__ import annotations

import math

import numpy as np
from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..calib import calibrate, calibrate_and_optimize, parse_visibility_csv
from ..classical import best_success_shared_random
from ..mc import Adversary, SimConfig, run_simulation
from ..protocol import ProtocolKind, RogerStrategy
from ..qstate import BlochState, make_state, search_encoding, tetrahedral_encoding
from ..strategy import optimize_mixed
from ..twophoton import CoincidenceModel, dip_curve
from . import schemas


def create_app() -> FastAPI:
    app = FastAPI(
        title="qfp",
        version=__version__,
        description="Single-qubit quantum fingerprinting toolkit",
    )

    @app.exception_handler(ValueError)
    async def _domain_error(request: Request, exc: ValueError):
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.get("/health", response_model=schemas.HealthResponse)
    def health():
        return schemas.HealthResponse(status="ok", version=__version__)

    @app.post("/encode", response_model=schemas.EncodeResponse)
    def encode(req: schemas.EncodeRequest):
        if req.message >= req.m:
            raise ValueError(f"message {req.message} outside [0, {req.m})")
        if req.m == 4 and not req.search:
            enc = tetrahedral_encoding()
        else:
            enc = search_encoding(req.m, req.iterations, req.seed)
        state = enc.states[req.message]
        return schemas.EncodeResponse(w=req.message, theta=state.theta, phi=state.phi)

    @app.post("/simulate", response_model=schemas.SimulateResponse)
    def simulate(req: schemas.SimulateRequest):
        kind = (
            ProtocolKind.QUANTUM_UNENTANGLED
            if req.protocol == "quantum"
            else ProtocolKind.QUANTUM_ENTANGLED
        )
        if req.adversary == "wcs":
            adversary = Adversary.wcs()
        elif req.adversary == "uniform":
            adversary = Adversary.uniform()
        else:
            adversary = Adversary.fixed_pair(req.x, req.y)
        config = SimConfig(
            kind=kind,
            trials=req.trials,
            seed=req.seed,
            model=CoincidenceModel(d=req.dip_depth, tau_c=req.tau_c),
            strategy=RogerStrategy(pi0=req.pi0, pi1=req.pi1),
            adversary=adversary,
        )
        report = run_simulation(config, workers=req.workers)
        return schemas.SimulateResponse(**report.to_json_dict())

    @app.post("/optimize", response_model=schemas.OptimizeResponse)
    def optimize(req: schemas.OptimizeRequest):
        ms = optimize_mixed(req.p_same, req.p_diff)
        return schemas.OptimizeResponse(pi0=ms.pi0, pi1=ms.pi1, success=ms.success)

    @app.post("/calibrate", response_model=schemas.CalibrateResponse)
    def calibrate_endpoint(req: schemas.CalibrateRequest):
        table = parse_visibility_csv(req.csv_text)
        strategy = None
        if req.optimize:
            cal, ms = calibrate_and_optimize(table)
            strategy = schemas.OptimizeResponse(pi0=ms.pi0, pi1=ms.pi1, success=ms.success)
        else:
            cal = calibrate(table)
        return schemas.CalibrateResponse(
            d=cal.d,
            v_off=cal.v_off,
            p_same_err=cal.p_same_err,
            p_diff_err=cal.p_diff_err,
            strategy=strategy,
        )

    @app.post("/classical", response_model=schemas.ClassicalResponse)
    def classical(req: schemas.ClassicalRequest):
        report = best_success_shared_random(4, req.shared_bits, req.roger, req.scoring)
        return schemas.ClassicalResponse(**report.to_json_dict())

    @app.post("/dip-curve", response_model=schemas.DipCurveResponse)
    def dip_curve_endpoint(req: schemas.DipCurveRequest):
        # Two states separated by the requested overlap: theta = 2 acos(sqrt(delta)).
        a = BlochState(0.0, 0.0)
        b = make_state(2.0 * math.acos(math.sqrt(req.delta)), 0.0)
        model = CoincidenceModel(d=req.dip_depth, tau_c=req.tau_c)
        delays = np.linspace(-req.tau_max, req.tau_max, req.points)
        points = dip_curve(a, b, model, delays)
        return schemas.DipCurveResponse(
            points=[schemas.DipPointOut(tau_s=t, relative_rate=r) for t, r in points]
        )

    return app


app = create_app()
