"""Single-qubit quantum fingerprinting toolkit.

Simulates the simultaneous-message-passing equality game for two-bit
messages encoded in single photonic qubits: analytic error rates, a seeded
Monte Carlo engine, visibility calibration from measured Hong-Ou-Mandel
tables, Roger's mixed-strategy optimizer, and exact classical baselines.
"""

__version__ = "0.1.0"

from .calib import (
    CalibrationResult,
    VisibilityTable,
    calibrate,
    calibrate_and_optimize,
    parse_visibility_csv,
    reference_visibility_table,
)
from .classical import (
    GameValueReport,
    best_success_shared_random,
    min_wcs_error_two_sided,
    wcs_error_one_sided,
)
from .mc import Adversary, SimConfig, SimReport, run_simulation, wilson_interval
from .protocol import (
    AnalyticRates,
    Message,
    ProtocolKind,
    RogerStrategy,
    TrialOutcome,
    analytic_rates,
    encode_entangled,
    encode_unentangled,
    roger_infer,
    run_trial,
)
from .qstate import (
    BlochState,
    Encoding,
    delta_max,
    make_state,
    overlap,
    search_encoding,
    tetrahedral_encoding,
)
from .strategy import MixedStrategy, beats_classical, optimize_mixed, success_rates
from .twophoton import (
    CoincidenceModel,
    PauliOp,
    TwoQubitState,
    apply_pauli_pair,
    bell_singlet,
    coincidence_probability,
    dip_curve,
    product_state,
    singlet_fraction,
)
