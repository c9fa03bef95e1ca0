"""homkit: exact-arithmetic checks for twisted Lie structures.

Everything is computed over arbitrary-precision rationals; every
identity test in the package is an exact equality, never a tolerance.
The hot kernels (rational matrix products, elimination, multilinear
contractions) run through a compiled extension when available and fall
back to a pure-Python twin otherwise; see ``homkit._kernel.BACKEND``.
"""

from ._kernel import BACKEND as kernel_backend
from .errors import (DimensionMismatch, HomkitError, InvariantViolation,
                     NotARepresentation, NotDirac, NotHomCochain, NotRegular,
                     ParseError, SingularMatrix)
from .exactmath import Matrix, Rational, Subspace, nullspace
from .homlie import (BilinearMap, HomLieAlgebra, abelian, aff2, check_hom_leibniz,
                     check_hom_lie, heis3, is_morphism, is_regular, is_subalgebra,
                     sl2)
from .multilinear import AltForm
from .dgca import (DgcaData, bracket_from_differential, check_dgca,
                   check_sigma_tau_derivation, differential)
from .rep import (HomCochain, Representation, adjoint_rep, check_ds_properties,
                  check_representation, cohomology_dim, ds, glv_hom_lie,
                  hom_cochain_space, rep_iff_morphism, trivial_rep)
from .omni import (OmniElement, OmniSpace, OmniSubspace, bracket_q, check_dirac,
                   check_omni_axioms, delta, dirac_to_homlie, graph_of,
                   jacobiator, pairing_q, skew_bracket, thm1_equivalence)
from .homlie2 import HomLie2Data, check_homlie2, from_omni

__version__ = "0.1.0"
