"""Transitive vertex partitions of graphs.

Exact transitivity solvers (linear time on split, bipartite chain and
co-chain graphs; bounded exact search elsewhere), class recognizers with
certificates, t-atom generation and classification, and Nordhaus-Gaddum
analysis. Everything is implemented in the C++ core; this package re-exports
it.
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
