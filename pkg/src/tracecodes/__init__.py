"""Few-weight trace codes over F_p from quadratic forms x^{p^l+1}.

The package builds the codes C_{D_i} from the defining sets
D_i = {(x1, x2) : Tr(x1^{p^l+1}) = 1, Tr(x2) in C_i}, enumerates their weights
by brute force, and evaluates the closed-form weights and weight tables.
"""

from .analytic import (
    analytic_distribution,
    analytic_weight,
    classify_codeword,
    length_formula,
    pless_check,
    t_value,
    theoretical_distribution,
    theory_rows,
)
from .bounds import Optimality, classify_optimality, griesmer_lower_bound
from .construction import (
    Budget,
    DefiningSet,
    brute_distribution,
    build_defining_set,
    code_dimension,
    codeword,
    codeword_weight_brute,
)
from .distribution import WeightDistribution
from .errors import BudgetExceeded, ConsistencyError, HypothesisError, ParameterError, TraceCodeError
from .expsums import (
    CycInt,
    gauss_sum_p,
    gauss_sum_q,
    new_sum,
    new_sum_closed,
    quadratic_char_sum,
    quadratic_sum,
    solvable_set_count,
    weil_sum_closed,
    weil_sum_direct,
)
from .field import (
    FieldParams,
    FqElement,
    cyclotomic_class,
    eta_p,
    eta_q,
    linearized_solve,
    make_field,
    trace,
)
from .params import CodeSpec, UnprovenParametersWarning
from .report import CodeReport, run_report

__version__ = "0.1.0"
