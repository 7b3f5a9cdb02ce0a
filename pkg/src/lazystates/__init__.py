"""2-qubit laziness / discord / entanglement hierarchy toolkit."""

from ._version import __version__
from .belldiag import (
    REGION_LABELS,
    CensusReport,
    SliceGrid,
    bd_census,
    bd_compose,
    bd_region,
    bd_slice,
    bd_spectrum,
    census_to_csv,
    slice_to_csv,
)
from .classify import (
    DEFAULT_TOL,
    Classification,
    ConsistencyError,
    classify,
    classify_b,
    is_product,
    lazy_by_commutator,
    lazy_by_parallelism,
    pure_schmidt,
    separable_ppt,
    zero_discord_a,
)
from .dynamics import (
    CouplingHamiltonian,
    DynamicsCheckReport,
    RateReport,
    entropy_a,
    entropy_rate_at_zero,
    evolve,
    laziness_dynamics_check,
    random_hamiltonian,
)
from .families import (
    LazyDiscordantParams,
    SeparableFamilyParams,
    lazy_discordant_compose,
    lazy_discordant_spectrum,
    separable_classify,
    separable_compose,
    separable_fano,
)
from .fano import FanoParams, NormalForm, PhysicalityReport, compose, decompose, normal_form, validate
from .stateio import StateFileError, load_state_file, save_state_file

__all__ = [
    "__version__",
    "REGION_LABELS",
    "CensusReport",
    "SliceGrid",
    "bd_census",
    "bd_compose",
    "bd_region",
    "bd_slice",
    "bd_spectrum",
    "census_to_csv",
    "slice_to_csv",
    "DEFAULT_TOL",
    "Classification",
    "ConsistencyError",
    "classify",
    "classify_b",
    "is_product",
    "lazy_by_commutator",
    "lazy_by_parallelism",
    "pure_schmidt",
    "separable_ppt",
    "zero_discord_a",
    "CouplingHamiltonian",
    "DynamicsCheckReport",
    "RateReport",
    "entropy_a",
    "entropy_rate_at_zero",
    "evolve",
    "laziness_dynamics_check",
    "random_hamiltonian",
    "LazyDiscordantParams",
    "SeparableFamilyParams",
    "lazy_discordant_compose",
    "lazy_discordant_spectrum",
    "separable_classify",
    "separable_compose",
    "separable_fano",
    "FanoParams",
    "NormalForm",
    "PhysicalityReport",
    "compose",
    "decompose",
    "normal_form",
    "validate",
    "StateFileError",
    "load_state_file",
    "save_state_file",
]
