"""Exact-rational divisorial stability checks for Fano varieties.

Three independent routes to the invariant ``eta(D)``:

* :mod:`divstab.toric` from the anticanonical polytope of a toric Fano,
* :mod:`divstab.modelseq` from intersection numbers along an ample model
  sequence, with closed forms in :mod:`divstab.closed_forms`,
* :mod:`divstab.weights` from lattice-point counts of section spaces.

All arithmetic is done in :class:`fractions.Fraction`.
"""
from .closed_forms import (
    SignedEta,
    blowup_ci_sequence,
    curve_blowup_sequence,
    eta_blowup_ci,
    eta_curve_blowup_3fold,
    eta_negsection_blowup,
    eta_rho_one,
    negsection_blowup_sequence,
    rho_one_sequence,
)
from .errors import (
    ConstraintViolated,
    DivstabError,
    FitMismatch,
    InvalidInterval,
    InvalidSequence,
    NegativeX,
    NotFano,
    OutOfRange,
    Unbounded,
    ZeroVolume,
)
from .exact import Rational, fmt, rat
from .modelseq import (
    ModelSegment,
    ModelSequence,
    ValidationReport,
    df_from_eta,
    eta_intersection,
    eta_scaled_divisor,
    eta_volume,
    restricted_volume_at,
    slope_xi,
    validate_sequence,
    volume_at,
)
from .polynomial import RatPolynomial, integrate, interpolate
from .polytope import HalfSpace, Polytope, affine_image, barycenter, halfspace_slice, moment, vertex_enumerate, volume
from .toric import (
    OkounkovObstruction,
    ToricFano,
    ToricVerdict,
    exit_point,
    okounkov_barycenter_verdict,
    pseudoeffective_threshold,
    semistability_verdict,
    slice_volume_pieces,
    toric_eta,
    toric_eta_by_slices,
    toric_volume_at,
    transform_fan,
)
from .weights import WeightSeries, df_from_weights, eta_from_weights, section_count, weight_series

__version__ = "0.1.0"
