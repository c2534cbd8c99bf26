from fastapi import APIRouter

from app.api.v1.endpoints import montecarlo, partial_sums, series, tables, verify

api_router = APIRouter()

api_router.include_router(tables.router, prefix="/tables", tags=["tables"])
api_router.include_router(series.router, prefix="/series", tags=["series"])
api_router.include_router(verify.router, prefix="/verify", tags=["verify"])
api_router.include_router(montecarlo.router, prefix="/montecarlo", tags=["montecarlo"])
api_router.include_router(partial_sums.router, prefix="/partial-sums", tags=["partial-sums"])
