"""Exact-arithmetic knot-group presentations of branched twist spins and
counts of their irreducible metabelian SL(2,C) representations.

Highlights: planar-diagram and braid-word parsing, Wirtinger presentations,
Alexander polynomials by Fox calculus, knot determinants through independent
routes, Smith normal forms with recorded transforms, fibered-form
presentations of twist-spun knot groups, and a three-way cross-validated
representation count (closed formula, character enumeration, brute-force
dihedral search).
"""

from .errors import InputError, TwistspinError, VerificationError
from .freegroup import (
    LaurentPoly,
    Presentation,
    Word,
    abelianization_matrix,
    fox_derivative,
    free_reduce,
)
from .invariants import (
    SeifertMatrix,
    SNFResult,
    alexander_polynomial,
    bareiss_determinant,
    branched_cover_h1_order,
    determinant_of_poly,
    determinant_of_seifert,
    fox_colorings,
    smith_normal_form,
    wirtinger,
)
from .metabelian import (
    Character,
    DihedralElement,
    RepClass,
    brute_force_count,
    build_representation,
    character_condition_matrix,
    count_by_formula,
    count_representations,
    distinguish,
    enumerate_characters,
    extend_character,
    verify_representation,
)
from .notation import BraidWord, Diagram, braid_closure, parse_braid, parse_pd, render_pd
from .spinning import (
    LinPresentation,
    TwistSpinParams,
    branched_cover_presentation,
    btws_presentation,
    make_params,
    plotnick_presentation,
    reduced_presentation,
)
from .tables import KnotRecord, find_knot, load_lin_data, load_table, verify_record

__version__ = "0.1.0"
