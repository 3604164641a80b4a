"""Exact positive- and negative-base numeration.

Thin wrapper over the compiled ``_negabeta`` module: expansions,
admissibility, integer windows, gap distances, fixing morphisms, and
conjugate point clouds over algebraic bases.
"""

try:
    from ._negabeta import Base, NumerationError
except ImportError:  # running against a build tree on sys.path
    from _negabeta import Base, NumerationError

__all__ = ["Base", "NumerationError"]
