"""Exact chromatic, lattice and configuration-space invariants of simple graphs.

Thin wrapper around the compiled extension. All counting is exact: big
values arrive as Python ints, polynomial data as coefficient lists.
"""

try:
    from chromaconf._chromaconf import *  # noqa: F401,F403  (wheel layout)
    from chromaconf import _chromaconf as _impl
except ImportError:  # build-tree layout: extension on sys.path directly
    from _chromaconf import *  # noqa: F401,F403
    import _chromaconf as _impl

__all__ = [name for name in dir(_impl) if not name.startswith("_")]
__version__ = "0.1.0"
