"""Two-qubit entanglement and mixedness toolkit.

Density matrices are plain 4x4 complex numpy arrays in the product basis
|00>, |01>, |10>, |11>. Entanglement measures (eof, er_*) use log base 2 so
Bell states score 1; the von Neumann entropy uses log base 4 so the maximally
mixed state scores 1.
"""

from ._memsfront import (
    bell_diagonal_rank2,
    bell_phi_plus,
    chsh_b,
    closest_separable_rank3,
    cn_bounds,
    concurrence,
    crossing_table,
    eof,
    er_rank3,
    er_werner,
    from_x_params,
    frontier_point,
    gisin_c,
    hermitian_eigensystem,
    linear_entropy,
    ls_decompose,
    maximal_form_from_spectrum,
    measure_all,
    mems_ef_sl,
    mems_ef_sv,
    mems_n_sl,
    negativity,
    partial_transpose,
    participation_ratio,
    random_density,
    run_cli,
    scatter_measures,
    sl_sv_envelope,
    tangle,
    von_neumann_entropy,
    werner,
)

__all__ = [
    "bell_diagonal_rank2",
    "bell_phi_plus",
    "chsh_b",
    "closest_separable_rank3",
    "cn_bounds",
    "concurrence",
    "crossing_table",
    "eof",
    "er_rank3",
    "er_werner",
    "from_x_params",
    "frontier_point",
    "gisin_c",
    "hermitian_eigensystem",
    "linear_entropy",
    "ls_decompose",
    "maximal_form_from_spectrum",
    "measure_all",
    "mems_ef_sl",
    "mems_ef_sv",
    "mems_n_sl",
    "negativity",
    "partial_transpose",
    "participation_ratio",
    "random_density",
    "run_cli",
    "scatter_measures",
    "sl_sv_envelope",
    "tangle",
    "von_neumann_entropy",
    "werner",
]
