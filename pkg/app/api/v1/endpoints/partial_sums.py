from fastapi import APIRouter, HTTPException

from app.api.deps import Distribution, Lambda, XPoint
from app.core.exceptions import InvalidParameterError
from app.core.rational import format_rational
from app.schemas.document import Document
from app.services import table_services

router = APIRouter()


@router.get("/", response_model=Document)
def partial_sum(dist: Distribution, lam: Lambda, x: XPoint, n: int = 4, terms: int = 40):
    try:
        row = table_services.partial_sum(dist, lam, n, x, terms)
    except InvalidParameterError as e:
        raise HTTPException(status_code=400, detail=str(e))
    params = {
        "dist": dist.spec,
        "lambda": format_rational(lam),
        "n": str(n),
        "x": format_rational(x),
        "terms": str(terms),
    }
    return Document(command="partial-sum", params=params, rows=[row])
