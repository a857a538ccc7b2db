"""Exact finite refinement of direct-sum decompositions of k^n."""

from .core import (
    Subspace,
    complement_in,
    full_space,
    span_canonicalize,
    subspace_intersect,
    subspace_sum,
    zero_subspace,
)
from .decomp import (
    Decomposition,
    ValidationReport,
    coordinates,
    make_decomposition,
    pull_back_decomposition,
    submodule_support,
    validate_decomposition,
)
from .errors import DsRefineError, InputError, InternalError, PreconditionError
from .field import FieldSpec
from .kernels import BACKEND
from .refine import (
    RefinementCertificate,
    RefinementInstance,
    lemma_split,
    make_instance,
    proposition_refine,
    theorem_refine,
    verify_certificate,
)

__version__ = "0.1.0"
