"""
Constants of the D2Q4 vectorial lattice
"""
import numpy as np

# Lattice velocity indices (i, j); the opposite of position k is (k + 2) % 4
VELOCITIES: tuple[tuple[int, int], ...] = ((1, 0), (0, 1), (-1, 0), (0, -1))
OPPOSITE: tuple[int, ...] = (2, 3, 0, 1)
N_LINKS = 4

# State vector U = (v_x, v_y, j_s, j_d, j_xy)
STATE_COMPONENTS: tuple[str, ...] = ("v_x", "v_y", "j_s", "j_d", "j_xy")
N_COMPONENTS = 5

# Anti bounce-back on the velocity components, bounce-back on the rest
REFLECTION = np.array([-1.0, -1.0, 1.0, 1.0, 1.0])

# Wall distance of every boundary link on half-way offset lattices
HALF_WAY = 0.5

STRESS_COMPONENTS: tuple[str, ...] = ("sxx", "syy", "sxy")
SNAPSHOT_COLUMNS: tuple[str, ...] = ("x", "y", "u_x", "u_y", "v_x", "v_y", "sxx", "syy", "sxy")
NORM_TRACE_COLUMNS: tuple[str, ...] = ("step", "time", "norm", "relative_drift")
ERROR_TRACE_COLUMNS: tuple[str, ...] = ("step", "time", "l2rel_u")
ORDER_TABLE_COLUMNS: tuple[str, ...] = (
    "case", "mode", "cK2", "cmu2", "dx", "dt", "field", "norm", "error", "observed_order"
)
CUT_COLUMNS: tuple[str, ...] = ("x", "y", "u_x", "u_y", "exact_u_x", "exact_u_y")
