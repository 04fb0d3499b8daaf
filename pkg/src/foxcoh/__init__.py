"""Exact twisted group cohomology in sp(2,1) and its complex subalgebras."""

__version__ = "0.1.0"

from .cohomology import (  # noqa: E402
    CohomologyReport,
    coboundary_matrix,
    cocycle_matrix,
    h0_dimension,
    h1_dimension,
)
from .entry import format_quaternion, parse_entry  # noqa: E402
from .field import FieldElement, Quaternion  # noqa: E402
from .lie import (  # noqa: E402
    HermitianForm,
    LieBasis,
    Representation,
    adjoint_matrix,
    centralizer_dimension,
    derive_invariant_form,
    lie_basis,
)
from .manifest import Manifest, load_manifest  # noqa: E402
from .words import FreeWord, GroupRingElement, Presentation, fox_derivative, parse_word  # noqa: E402
