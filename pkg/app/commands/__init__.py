from . import grassmannian, sheaves, structure, verify

COMMAND_GROUPS = [structure, sheaves, grassmannian, verify]

__all__ = ["COMMAND_GROUPS"]
