"""Multipartite entanglement measures for N-qubit pure states.

Exact K-way partial transposes, global and K-way negativities, negativity
fonts, and the determinant-based three- and four-tangle, together with
numerical verification of their local-unitary covariance relations.
"""

__version__ = "0.1.0"

from .states import (
    MAX_QUBITS,
    BasisIndex,
    DensityOperator,
    LocalUnitary,
    PureState,
    apply_local_unitary,
    bits_to_index,
    cluster4,
    density,
    ghz,
    haar_unitary,
    index_to_bits,
    make_state,
    product_state,
    random_local_unitary,
    random_state,
    reduced_density,
    state_from_payload,
    state_to_payload,
    su2_rotation,
    w_state,
)
from .transpose import decomposition_residual, global_pt, k_label, kway_pt
from .spectra import (
    Font,
    concurrence_2q,
    enumerate_fonts,
    font_negativity_2q,
    global_negativity,
    hermitian_eigenvalues,
    kway_negativity,
    trace_norm,
)
from .invariants import (
    CovarianceReport,
    FourQubitFonts,
    ThreeQubitFonts,
    covariance_check_3,
    covariance_check_4,
    four_invariant,
    four_qubit_fonts,
    four_tangle,
    lu_invariance_sweep,
    monogamy_residual,
    product_identity_residual,
    three_qubit_fonts,
    three_tangle,
)

__all__ = [
    "MAX_QUBITS",
    "BasisIndex",
    "CovarianceReport",
    "DensityOperator",
    "Font",
    "FourQubitFonts",
    "LocalUnitary",
    "PureState",
    "ThreeQubitFonts",
    "apply_local_unitary",
    "bits_to_index",
    "cluster4",
    "concurrence_2q",
    "covariance_check_3",
    "covariance_check_4",
    "decomposition_residual",
    "density",
    "enumerate_fonts",
    "font_negativity_2q",
    "four_invariant",
    "four_qubit_fonts",
    "four_tangle",
    "ghz",
    "global_negativity",
    "global_pt",
    "haar_unitary",
    "hermitian_eigenvalues",
    "index_to_bits",
    "k_label",
    "kway_negativity",
    "kway_pt",
    "lu_invariance_sweep",
    "make_state",
    "monogamy_residual",
    "product_identity_residual",
    "product_state",
    "random_local_unitary",
    "random_state",
    "reduced_density",
    "state_from_payload",
    "state_to_payload",
    "su2_rotation",
    "three_qubit_fonts",
    "three_tangle",
    "trace_norm",
    "w_state",
]
