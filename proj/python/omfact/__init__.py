"""Exact verification of minus-type orthogonal group factorizations."""

try:
    from ._omfact import *  # noqa: F401,F403
except ImportError:  # pragma: no cover - build-tree layout
    from _omfact import *  # noqa: F401,F403
