from typing import Optional

from fastapi import APIRouter, HTTPException

from app.api.deps import Distribution, Lambda
from app.core.exceptions import InvalidParameterError
from app.core.rational import format_rational
from app.schemas.document import Document
from app.services import table_services

router = APIRouter()


@router.get("/", response_model=Document)
def polynomial_table(dist: Distribution, lam: Lambda, n_max: int = 10, r: Optional[int] = None):
    try:
        rows = table_services.table_rows(dist, lam, n_max, r)
    except InvalidParameterError as e:
        raise HTTPException(status_code=400, detail=str(e))
    params = {"dist": dist.spec, "lambda": format_rational(lam), "n_max": str(n_max)}
    if r is not None:
        params["r"] = str(r)
    return Document(command="table", params=params, rows=rows)
