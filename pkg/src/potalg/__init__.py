"""potalg: exact workbench for algebras cut out by cyclic potentials.

Three weighted generators, exact rational arithmetic throughout.  The
package builds noncommutative algebras from potentials, certifies their
Hilbert series, finds and verifies central elements, and cross-checks the
commutative Poisson picture (brackets, derivative quotients, dimension
series, weight classification, matrix factorizations).
"""

from .ncalg import (
    CyclicWord,
    NCPoly,
    ParameterSet,
    Potential,
    STANDARD_WEIGHTS,
    WeightSystem,
    Word,
    abelianize,
    cyclic_derivative,
    make_PQR,
    make_standard_potential,
    standard_relations,
    weighted_degree,
    word_count,
)
from .commpoly import CommPoly
from .gridal import (
    HilbertReport,
    IdealComponent,
    QuotientBasis,
    RelationSet,
    hilbert_certificate,
    ideal_component,
    normal_form,
    quotient_by_center_dims,
    quotient_dims,
)
from .center import (
    CentralizerSolution,
    two_twist_psi,
    two_twist_relations,
    centralizer,
    compare_mod_ideal,
    table_central_element,
    verify_central,
)
from .poisson import (
    JacobiReport,
    OneForm,
    PoissonStructure,
    bracket,
    build_delpezzo_phi,
    fermat_phi,
    frobenius_and_unimodularity,
    jacobi_identity_check,
    jacobi_ring,
    milnor_number,
)
from .series import (
    LaurentSeries,
    SaitoFunction,
    hh2_nonpositive_dim,
    hh_series,
    ph_Aphi_ranks,
    ph_Bphi_dims,
    product_series,
    saito,
)
from .classify import ClassificationResult, classify_weights, enumerate_elliptic
from .matfact import (
    CurvePoint,
    MatrixFactorization,
    adjugate_identity_check,
    build_D,
    symbolic_adjugate_identity,
    verify_factorization,
)

__version__ = "0.1.0"
