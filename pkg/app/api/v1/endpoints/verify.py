from fastapi import APIRouter, HTTPException
from pydantic import ValidationError

from app.core.exceptions import UnknownIdentityError
from app.schemas.checks import CheckConfig, VerifyRequest
from app.schemas.document import Document
from app.services import identity_services

router = APIRouter()


@router.post("/", response_model=Document)
def verify(request: VerifyRequest):
    overrides = request.model_dump(exclude={"suite"}, exclude_none=True)
    try:
        cfg = CheckConfig.default(**overrides)
    except ValidationError as e:
        raise HTTPException(status_code=400, detail=str(e))
    selection = None if "all" in request.suite else request.suite
    try:
        reports = identity_services.run_suite(cfg, selection)
    except UnknownIdentityError as e:
        raise HTTPException(status_code=404, detail=str(e))
    params = {"suite": ",".join(request.suite)}
    params.update(
        {name: ",".join(value) if isinstance(value, list) else str(value) for name, value in overrides.items()}
    )
    return Document(
        command="verify",
        params=params,
        passed=identity_services.suite_passed(reports),
        rows=reports,
    )
