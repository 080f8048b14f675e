"""Kautz, De Bruijn and cyclic Kautz digraphs.

Constructors for the four families, line and partial line digraph
operators, exact diameters, imprint-based reachability for CK(2, l) and
exact evaluators for the vertex and arc counts.
"""

from .digraph import (
    INFINITE,
    NONEXISTENT,
    UNREACHABLE,
    DegreeProfile,
    Diameter,
    DiameterKind,
    Digraph,
    bfs_distances,
    build,
    complete_symmetric_digraph,
    diameter,
    directed_cycle,
    is_directed_cycle,
    is_strongly_connected,
    iterated_line_digraph,
    line_digraph,
    partial_line_digraph,
    strongly_connected_components,
)
from .errors import CKGraphError
from .families import (
    Family,
    FamilySpec,
    cyclic_kautz,
    de_bruijn,
    kautz,
    modified_cyclic_kautz,
)
from .formulas import (
    CountTriple,
    bcd_closed_form,
    bcd_recurrence,
    ck4_count_closed_form,
    ck_arc_count,
    ck_diameter_formula,
    ck_iterated_vertex_count,
    ck_vertex_count,
    e_closed_form,
)
from .labels import (
    Imprint,
    Sign,
    format_label,
    from_imprint,
    imprint,
    is_cyclic_kautz_label,
    is_kautz_label,
    parse_label,
    rotate,
    sgn,
    swap_symbol,
)
from .reachability import component_census, reachable

__version__ = "0.1.0"
