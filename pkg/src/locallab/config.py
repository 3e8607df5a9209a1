"""Enumeration ceilings.

Every exhaustive kernel checks its workload against a ceiling before it
starts.  The environment variable LOCALLAB_BUDGET, when set to an
integer, overrides all of them at once.
"""

import os

# ordered 2r-tuple enumeration in the brute-force energy count
BRUTE_FORCE_TUPLE_BUDGET = 10**9

# edges materialized when building an energy graph
ENERGY_GRAPH_EDGE_BUDGET = 10**7

# search nodes in the exact minimization oracles
ORACLE_NODE_BUDGET = 10**8


def budget(default):
    """Return the override from LOCALLAB_BUDGET, or `default`."""
    raw = os.environ.get("LOCALLAB_BUDGET")
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError("LOCALLAB_BUDGET must be an integer") from None
