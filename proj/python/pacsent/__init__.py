"""Entanglement of photon-added coherent state superpositions."""

try:
    from ._pacsent import *  # noqa: F401,F403
    from ._pacsent import __doc__  # noqa: F401
except ImportError:  # in-tree build: extension sits next to the build products
    from _pacsent import *  # noqa: F401,F403

__version__ = "0.1.0"
