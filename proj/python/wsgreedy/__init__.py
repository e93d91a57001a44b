"""Greedy extension algorithms for weakly-supermodular minimization."""

try:
    from ._wsgreedy import *  # noqa: F401,F403
except ImportError:  # in-tree builds put the extension on sys.path directly
    from _wsgreedy import *  # noqa: F401,F403
