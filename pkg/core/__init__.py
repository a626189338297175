__version__ = "1.0.0"

from .service import CalculationService
from .errors import QKCError, ConfigurationError, DomainError, InvariantError
from .models import BasisTag, Shape, SpaceKind

__all__ = [
    'CalculationService',
    'QKCError',
    'ConfigurationError',
    'DomainError',
    'InvariantError',
    'BasisTag',
    'Shape',
    'SpaceKind',
]
