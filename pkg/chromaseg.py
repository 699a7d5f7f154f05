"""
Root entrypoint: ``python chromaseg.py <segment|gen-scene|bench> ...``.

Puts the repository root on sys.path so ``import src...`` works without an
install step.
"""

from __future__ import annotations

import sys
from pathlib import Path

REPO_ROOT = Path(__file__).resolve().parent
if str(REPO_ROOT) not in sys.path:
    sys.path.insert(0, str(REPO_ROOT))

from src.cli import main  # noqa: E402

if __name__ == "__main__":
    raise SystemExit(main())
