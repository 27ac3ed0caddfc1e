"""Exact spectra of signless 1-Laplacians on finite simplicial complexes."""

from .complexes import Face, IncidenceMatrix, Mode, SimplicialComplex, as_face
from .eigen import (
    Certificate,
    Normalization,
    ProblemSpec,
    SumForm,
    VerifyResult,
    build_inclusion_system,
    energy,
    norm,
    verify_eigenpair,
)
from .feasibility import FeasibilityResult, LinearSystem, maximize_margin, solve
from .arrangement import ArrangementFace, enumerate_faces
from .spectrum import (
    Eigenpair,
    SpectrumReport,
    check_zero_eigenvalue_conditions,
    compute_spectrum,
    extreme_eigenvalues,
    grid_oracle_spectrum,
)
from .nodal import (
    NodalDecomposition,
    check_nodal_restriction_property,
    nodal_domains,
    restrict_to_domain,
)
from .combinatorics import (
    BoundReport,
    FaceGraph,
    bound_report,
    clique_cover_number,
    face_chromatic_number,
    independence_number,
    vertex_alpha_facet,
    vertex_alpha_s,
    vertex_chi_facet,
    vertex_chi_s,
)
from .constructions import (
    check_duplication_eigenpair,
    check_wedge_spectrum,
    closure,
    duplicate_motif,
    is_i_motif,
    link,
    star,
    wedge_sum,
)

__version__ = "0.1.0"
