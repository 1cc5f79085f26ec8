"""Small shared helpers."""
from __future__ import annotations

import os
from pathlib import Path


def atomic_write_text(path, text: str) -> None:
    """Write via a temp file in the same directory and rename into place,
    so a failed run never leaves a partial file."""
    path = Path(path)
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(text, encoding="utf-8")
    os.replace(tmp, path)
