from ._sympkit import (
    __version__,
    charpoly_census,
    enumerate_y,
    gsp4_order,
    hecke_data,
    martin_orders,
    rou_count,
    run,
    sp4_order,
    spin_factor,
)

__all__ = [
    "charpoly_census",
    "enumerate_y",
    "gsp4_order",
    "hecke_data",
    "martin_orders",
    "rou_count",
    "run",
    "sp4_order",
    "spin_factor",
]
