"""Face counts of graphical zonotopes by three independent routes.

* flats: sum over flats F of the graphic matroid of a(G/F) q^rk(F)
* theorem: (-1)^n chi_{-q}(G, -1), the principal specialization of the
  q-chromatic symmetric function
* oracle: brute-force covector enumeration of the graphical arrangement
"""

from .errors import BudgetError, ValidationError
from .graph import (
    Graph,
    VertexPartition,
    components,
    contract,
    family,
    graph_rank,
    induced,
    make_graph,
    wedge,
    whitney_twist,
)
from .flats import Flat, enumerate_flats, flats_of_rank, is_flat
from .poly import IntPolynomial
from .chromatic import acyclic_count, acyclic_count_brute, chromatic_poly
from .qsym import (
    BinomialFormPolynomial,
    MonomialExpansion,
    chi_q,
    chi_q_eval,
    ps_monomial,
    psi_q,
    zeta_q_alpha,
)
from .zonotope import (
    antipode,
    eulerian_poly,
    f_poly_cycle_closed,
    f_poly_flats,
    f_poly_main,
    f_vector,
    zeta_q_of_antipode,
)
from .oracle import covector_of, enumerate_covectors, f_vector_oracle, ordered_set_partitions

__version__ = "0.1.0"
