# densegreedy/main.py

import logging

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from densegreedy import deps
from densegreedy.errors import DenseGreedyError, ResourceError
from densegreedy.routes_bounds import router as bounds_router
from densegreedy.routes_experiments import router as experiments_router
from densegreedy.routes_graphs import router as graphs_router
from densegreedy.routes_oracle import router as oracle_router

deps.configure_logging()
logger = logging.getLogger(__name__)

app = FastAPI(title="Dense Greedy API")
app.include_router(graphs_router)
app.include_router(bounds_router)
app.include_router(oracle_router)
app.include_router(experiments_router)

# --- CORS: local frontends unless DENSEGREEDY_CORS_ORIGINS says otherwise ---
app.add_middleware(
    CORSMiddleware,
    allow_origins=deps.CORS_ORIGINS,
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)


@app.exception_handler(DenseGreedyError)
def handle_domain_error(request: Request, exc: DenseGreedyError):
    status = 413 if isinstance(exc, ResourceError) else 400
    logger.info("%s %s -> %d %s: %s", request.method, request.url.path, status, exc.kind, exc)
    return JSONResponse(status_code=status, content={"detail": str(exc), "kind": exc.kind})


# ---------- health ----------
@app.get("/health")
def health():
    return {"ok": True}
