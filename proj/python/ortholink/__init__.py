"""Orthogeodesic arc censi, Poincare series and Legendrian linking."""

try:
    from ._ortholink import *  # noqa: F401,F403
    from ._ortholink import __doc__  # noqa: F401
except ImportError:  # development layout: extension on PYTHONPATH
    from _ortholink import *  # noqa: F401,F403
