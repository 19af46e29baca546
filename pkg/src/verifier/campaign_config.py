"""Campaign configuration files.

A campaign file is a flat `key = value` file (comments with `#`), read
with python-dotenv and validated by TestCampaign. Errors name the line
where the offending key appears.

    seed = 7
    max_set_size = 5
    suites = group-laws, retraction-oracle
"""

from __future__ import annotations

from pathlib import Path
from typing import Any, Optional

from dotenv import dotenv_values
from pydantic import ValidationError

from ..cantor import CantorError
from .models import TestCampaign


class CampaignConfigError(CantorError):
    """Raised for unreadable or invalid campaign files."""

    def __init__(self, message: str, line: Optional[int] = None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


def _key_lines(path: Path) -> dict[str, int]:
    lines: dict[str, int] = {}
    for number, raw in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
        text = raw.strip()
        if not text or text.startswith("#"):
            continue
        if "=" not in text:
            raise CampaignConfigError(f"expected 'key = value', got {text!r}", number)
        key = text.split("=", 1)[0].strip()
        if key.startswith("export "):
            key = key[len("export ") :].strip()
        if key not in TestCampaign.model_fields:
            raise CampaignConfigError(f"unknown key {key!r}", number)
        lines[key] = number
    return lines


def load_campaign(path: Optional[Path] = None, **overrides: Any) -> TestCampaign:
    """Campaign from an optional file, with non-None overrides taking precedence."""
    values: dict[str, Any] = {}
    lines: dict[str, int] = {}
    if path is not None:
        if not path.is_file():
            raise CampaignConfigError(f"campaign file {path} not found")
        lines = _key_lines(path)
        values.update(dotenv_values(path, interpolate=False))
    values.update({k: v for k, v in overrides.items() if v is not None and v != ()})
    try:
        return TestCampaign.model_validate(values)
    except ValidationError as e:
        error = e.errors()[0]
        key = str(error["loc"][0]) if error["loc"] else ""
        line = lines.get(key) if key not in overrides or overrides[key] in (None, ()) else None
        raise CampaignConfigError(f"{key}: {error['msg']}", line) from e
