from .space_service import SpaceService, get_space_service

__all__ = [
    "SpaceService",
    "get_space_service",
]
