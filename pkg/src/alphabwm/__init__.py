"""Alpha-cut interval fuzzy best-worst method.

Derives triangular fuzzy criterion weights from best-to-others and
others-to-worst linguistic judgments by solving a finite-grid minimax problem,
reports interval and midpoint crisp weights with a controllable degree of
approximation, and quantifies judgment consistency through consistency-value
case analysis with CI/CR bounds.
"""

from .fuzzy import (DivisionDomainError, Interval, TriangularFuzzyNumber,
                    alpha_cut, approximate_quotient, exact_quotient_membership,
                    gmir, interval_divide)
from .model import (SCALE, SCALE_DESCRIPTIONS, AlphaGrid, Fpcs, Hierarchy,
                    ValidationError, judgment_cut, load_document,
                    parse_document, parse_fpcs, parse_hierarchy, uniform_grid)
from .solver import (CompositionError, SolveReport, SolverError, SolverOptions,
                     WeightSet, all_interval_weights, dense_eta,
                     hierarchical_compose, interval_weights, max_residual,
                     midpoint_weights, oracle_solve, rank, residuals,
                     solve_full, solve_weights)
from .consistency import (ConsistencyReport, UndefinedCIError, Violation,
                          check_conditions, ci_lower_bound, ci_table, cr_upper,
                          cv_monotonicity, cv_pair, cv_quadratic,
                          cv_quartic_over, cv_quartic_under)

__version__ = "0.1.0"
