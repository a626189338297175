import sys
from pathlib import Path

# core/ fica na raiz do repositório, ao lado de app/
sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from .config import get_settings

__all__ = ["get_settings"]
