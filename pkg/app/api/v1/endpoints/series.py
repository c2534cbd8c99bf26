from fastapi import APIRouter, HTTPException

from app.api.deps import Distribution, Lambda, XPoint
from app.core.exceptions import InvalidParameterError, SeriesError
from app.core.rational import format_rational
from app.schemas.document import Document
from app.services import table_services

router = APIRouter()


@router.get("/", response_model=Document)
def generating_series(dist: Distribution, lam: Lambda, x: XPoint, order: int = 12):
    try:
        rows = table_services.series_rows(dist, lam, order, x)
    except (InvalidParameterError, SeriesError) as e:
        raise HTTPException(status_code=400, detail=str(e))
    params = {"dist": dist.spec, "lambda": format_rational(lam), "order": str(order), "x": format_rational(x)}
    return Document(command="series", params=params, rows=rows)
