from .graph import (Graph, IndependenceStatus, parse_graph, parse_graphs, serialize_graph,
                    max_degree, induced_subgraph, independence_status, maximal_independent_sets,
                    chromatic_number)
from .covering import (Covering, ChiDotResult, is_covering, chi_dot, partition_to_covering,
                       lemma2_extend, lemma3_prepend)
from .hom_complex import (MultiHom, CellComplex, build_hom, cell_dim, codim1_faces, build_delta_I,
                          intersect_delta, restrict_iso)
from .homology import (ChainComplex, HomologyReport, ConnectivityVerdict, chain_complex,
                       smith_normal_form, reduced_homology, homological_connectivity,
                       order_complex_oracle)
from .collapse import CollapseTrace, lemma4_ordering, lemma4_collapse
from .nerve import NerveDecomposition, TheoremReport, nerve_cover, check_nerve_hypotheses, verify_theorem

__version__ = '0.1.0'
