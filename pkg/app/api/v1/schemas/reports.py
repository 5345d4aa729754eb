from typing import Optional

from pydantic import BaseModel, ConfigDict


class ErrorResponse(BaseModel):
    """Error report printed by the CLI in --json mode"""
    model_config = ConfigDict(extra="allow")

    type: str
    message: str
    exit_code: int
    offset: Optional[int] = None
    player: Optional[str] = None
