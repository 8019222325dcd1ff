"""Network coding versus Steiner routing cost in the irregular (5+1) model."""

from ._sifca import (
    SifcaError,
    closed_form_class_i,
    cost_advantage,
    esmt,
    full_topology_count,
    mst,
    nc_cost_class_i,
    nc_cost_class_ii,
    region,
    sample,
    sweep,
)

__all__ = [
    "SifcaError",
    "closed_form_class_i",
    "cost_advantage",
    "esmt",
    "full_topology_count",
    "mst",
    "nc_cost_class_i",
    "nc_cost_class_ii",
    "region",
    "sample",
    "sweep",
]
