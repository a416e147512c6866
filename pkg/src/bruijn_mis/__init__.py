"""Maximum independent sets of the de Bruijn graphs B(d, 3).

Construction by the operators f, f', g, g', orbit enumeration under digit
permutations, exact counting, the bijection with loop-less sets, and the
resulting maximum comma-free codes of length 3.
"""

from .budget import BudgetExceeded
from .codes import CommaFreeCode, Provenance, classical_code, code_classes, codes_from_lmis, validate_code
from .constructors import (
    B1,
    B2,
    ConstructionTrace,
    DecompositionError,
    apply_f,
    apply_f_prime,
    apply_g,
    apply_g_prime,
    apply_op,
    construct,
    decompose,
    decompose_step,
    from_loopless,
    restrict,
    to_loopless,
    trace_stabilizer,
)
from .counting import CountTable, bivariate_coefficients, count_mis, count_mis_D2, egf_coefficients
from .enumeration import enumerate_all, enumerate_orbit_reps, oracle_enumerate
from .group import (
    Permutation,
    StabilizerDescription,
    act,
    canonical_lexmin,
    expand_orbit,
    stabilizer,
    transporter,
)
from .sets import (
    CandidateSet,
    InvalidSetError,
    Kind,
    MaxIndepSet,
    M_set,
    Violation,
    check_structure_lemmas,
    is_comma_free,
    is_independent,
    m_value,
    validate_mis,
)
from .words import DeBruijnGraph, adjacent, build_graph, cycle_of, export_dot, parse_word, theta

__version__ = "0.1.0"
