from .exe import worker_count, parallel_map
from .num import truncated_power, recentre, panel_rule, convergence_orders

__all__ = [
    "worker_count",
    "parallel_map",
    "truncated_power",
    "recentre",
    "panel_rule",
    "convergence_orders",
]
