"""Exact linear-code hull computations over small finite fields.

Thin Python layer over the C++ core: finite-field arithmetic, linear codes
with exact hull/distance computation, GRS / twisted-RS / BCH / constacyclic
constructions, maximal-hull search, and EAQEC parameter derivation.
"""

try:
    from ._hullforge import *  # noqa: F401,F403  (installed package layout)
    from ._hullforge import __doc__ as _core_doc  # noqa: F401
except ImportError:  # development layout: extension on PYTHONPATH
    from _hullforge import *  # noqa: F401,F403

__version__ = "1.0.0"
