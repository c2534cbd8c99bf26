from typing import Dict, List, Optional, Union

from pydantic import BaseModel

from app.schemas.checks import CheckReport
from app.schemas.montecarlo import McEstimate
from app.schemas.tables import PartialSum, SeriesRow, TableRow

Row = Union[TableRow, SeriesRow, PartialSum, CheckReport, McEstimate]


class Document(BaseModel):
    """What every command emits: the command name, its inputs as strings, and rows."""

    command: str
    params: Dict[str, str]
    passed: Optional[bool] = None
    rows: List[Row]
