"""Exact computations on metric graphs.

Thin re-export of the compiled extension: graphs, polarized Jacobians, the
Abel-Jacobi map, Ceresa-type classes, the w obstruction, and the finite twist
group with its comparison map. Rationals cross the boundary as "num/den"
strings so no precision is ever lost.
"""

try:
    from ._tropcer import (  # type: ignore[attr-defined]
        Graph,
        GraphError,
        abel_jacobi,
        ceresa_pointed,
        ceresa_unpointed,
        compare,
        morita,
        polarization,
        run,
        torsion,
        wclass,
        __version__,
    )
except ImportError:  # extension on sys.path directly (build-tree test runs)
    from _tropcer import (  # type: ignore[no-redef]
        Graph,
        GraphError,
        abel_jacobi,
        ceresa_pointed,
        ceresa_unpointed,
        compare,
        morita,
        polarization,
        run,
        torsion,
        wclass,
        __version__,
    )

__all__ = [
    "Graph",
    "GraphError",
    "abel_jacobi",
    "ceresa_pointed",
    "ceresa_unpointed",
    "compare",
    "morita",
    "polarization",
    "run",
    "torsion",
    "wclass",
    "__version__",
]
