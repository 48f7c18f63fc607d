"""Exact cohomological tools for tightness and degree of maps from CW complexes.

The algebra is done over the integers with no floating point: cokernels and
lattice membership come from Smith and Hermite normal forms. The
:mod:`cwtight.treemap` subpackage holds the numerical fractal-tree sampler.
"""

__version__ = "0.1.0"

from .complex import (
    ComplexPresentation,
    cell_class,
    codim1_cohomology,
    dumps_complex,
    loads_complex,
    top_cohomology,
)
from .deficient import Membership, Region, RegionKind, deficient_set, degree_sum_check, preimage_profile
from .degree import (
    CellDegree,
    CellularSphereMap,
    SphereTarget,
    TargetModel,
    absolute_degree,
    degree_density_verdict,
    degree_report,
    dumps_map,
    k_values,
    loads_map,
    twisted_degree,
)
from .errors import (
    ChainMapError,
    CwTightError,
    EmbeddingViolation,
    InputError,
    NonCyclicQuotient,
    NonCyclicTopCohomology,
    UnsupportedTarget,
)
from .lattice import (
    AbelianGroupPresentation,
    IntegerMatrix,
    cokernel,
    cyclic_quotient,
    hermite_normal_form,
    lattice_member,
    quotient_image,
    smith_normal_form,
)
from .tightness import Verdict, cell_removal_injective, density_verdict, is_tight
