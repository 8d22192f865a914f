from .search import (
    SolveResult,
    domination_number,
    restrained_domination_number,
    rid_number_exact,
    rrd_number,
)
from .treedp import rid_number_tree_dp
from .bounds import eta_bound, eta_terms
from .search import KINDS, solve
