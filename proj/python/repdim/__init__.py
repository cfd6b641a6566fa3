"""Euclidean representation numbers and two-distance embeddings of graphs."""

try:
    from ._repdim import *  # noqa: F401,F403
    from ._repdim import __doc__ as _doc
except ImportError:  # in-build tree: extension module next to the package on sys.path
    from _repdim import *  # noqa: F401,F403
    from _repdim import __doc__ as _doc

__doc__ = _doc
