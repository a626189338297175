"""
Serviço de Espaços - resolve textos como Gr(2,4) em posets construídos
"""
import logging
from typing import Dict, Optional

from core.errors import ConfigurationError
from core.models import Shape
from core.poset import CominusculePoset, build_poset
from core.utils import parse_shape, parse_space

from ..config import get_settings

logger = logging.getLogger(__name__)


class SpaceService:
    """Resolve e guarda em cache os posets pedidos pela linha de comando"""

    def __init__(self, max_dim: Optional[int] = None):
        self.max_dim = max_dim if max_dim is not None else get_settings().max_dim
        self._posets: Dict[str, CominusculePoset] = {}

    def get_poset(self, text: str) -> CominusculePoset:
        """
        Poset do espaço descrito em text.

        Raises:
            ConfigurationError: espaço inválido ou com dimensão acima de max_dim
        """
        space = parse_space(text)
        label = space.label
        if label not in self._posets:
            if space.dim > self.max_dim:
                raise ConfigurationError(
                    f"{label} tem dimensão {space.dim}, acima do limite {self.max_dim} (QKC_MAX_DIM)"
                )
            self._posets[label] = build_poset(space)
            logger.info(f"Espaço {label} carregado")
        return self._posets[label]

    def get_shape(self, poset: CominusculePoset, text: str) -> Shape:
        return parse_shape(poset, text)


_space_service: Optional[SpaceService] = None


def get_space_service() -> SpaceService:
    """Retorna a instância do serviço de espaços"""
    global _space_service
    if _space_service is None:
        _space_service = SpaceService()
    return _space_service
