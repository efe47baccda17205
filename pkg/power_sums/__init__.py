from .newton import (
    PowerSums,
    companion_matrix,
    companion_power_sums,
    direct_power_sums,
    newton_power_sums,
)
