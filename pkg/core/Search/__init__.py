from .grid import GridMinimum, bloch_grid_minimum
from .objective import UNDEFINED_PENALTY, GapObjective, gap_objective, require_searchable
from .optimizer import SearchConfig, SearchResult, minimize_gap, start_state
from .parameterization import param_count, parameterize_state, state_to_params

__all__ = [
    "UNDEFINED_PENALTY",
    "GapObjective",
    "GridMinimum",
    "SearchConfig",
    "SearchResult",
    "bloch_grid_minimum",
    "gap_objective",
    "minimize_gap",
    "param_count",
    "parameterize_state",
    "require_searchable",
    "start_state",
    "state_to_params",
]
