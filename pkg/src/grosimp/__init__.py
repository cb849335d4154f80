"""Finite truncated simplicial sets, diagram total spaces, marked-edge
localization, and homotopy colimits."""

from .category import (FiniteCategory, Functor, chain_category,
                       discrete_category, nerve, nerve_map, poset_category,
                       terminal_category, walking_iso_category)
from .diagram import (Diagram, constant_diagram, constant_marked_diagram,
                      mark_equivalences_diagram)
from .errors import (BudgetExceeded, ExtensionSearchError, GrosimpError,
                     MarkedEdgeError, TruncationError, WorkspaceError)
from .fibrations import (cocartesian_edges, is_cocartesian_edge,
                         is_cocartesian_fibration, is_inner_fibration,
                         is_quasi_category)
from .grothendieck import (canonical_iso, gerbe, gerbe_top_map,
                           grothendieck_total, marked_grothendieck_total,
                           marked_relative_nerve, relative_nerve,
                           relnerve_vertex_fiber_map, vertex_fiber_map)
from .hocolim import (bar_construction, colim_diagram, colim_marked,
                      colim_mediating, colimit_comparison_counts, hocolim,
                      iota_comparison, tensor_compat_check)
from .homs import enumerate_cell_maps, find_isomorphism
from .marked import (MarkedMap, MarkedSimplicialSet, adjunction_counit,
                     adjunction_unit, flat, is_equivalence_edge,
                     localization_universal, localize, localize_map,
                     mark_equivalences, sharp)
from .simplicial import (DEFAULT_DIM_BOUND, SimplicialMap,
                         TruncatedSimplicialSet, constant_map, coproduct,
                         horn, invertible_interval, product, pullback,
                         pushout, standard_object, standard_simplex)
from .util import Budget, canon_sorted, encode_id
from .validate import map_violations, violations
from .workspace import Workspace, decode_id

__version__ = "0.1.0"
