import re
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

IDENTIFIER_PATTERN = r"^[A-Za-z][A-Za-z0-9_]*$"


class PlayerSpec(BaseModel):
    model_config = ConfigDict(extra="ignore")

    name: str = Field(min_length=1)
    vars: List[str] = Field(min_length=1)
    utility: str

    @field_validator("vars")
    @classmethod
    def _identifiers(cls, value: List[str]) -> List[str]:
        for name in value:
            if not re.match(IDENTIFIER_PATTERN, name):
                raise ValueError(f"Invalid variable identifier: {name!r}")
        return value


class GameSpecDocument(BaseModel):
    """Game-spec JSON document"""
    model_config = ConfigDict(extra="ignore")

    name: Optional[str] = None
    players: List[PlayerSpec] = Field(min_length=1)
