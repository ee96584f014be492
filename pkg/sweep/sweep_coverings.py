"""χ̇ against the brute-force covering oracle and the lemmas on small graphs."""
import sys

from sweep.base_sweep import BaseSweep
from homkit.covering import all_coverings, chi_dot
from homkit.graph import (chromatic_number, delete_vertices, induced_subgraph, max_degree,
                          maximal_independent_sets, serialize_graph)


class CoveringSweep(BaseSweep):
    name = 'coverings'
    default_config = 'config/sweep/coverings.yaml'

    def instances(self, graphs):
        return graphs

    def run_instance(self, g):
        value = chi_dot(g).value
        record = {
            'graph6': serialize_graph(g, 'graph6').strip(),
            'chi_dot': value,
            'chromatic_number': chromatic_number(g),
            'max_degree': max_degree(g),
        }
        record['lemma1'] = value <= record['max_degree'] + 1
        record['chi_dot_ge_chi'] = value >= record['chromatic_number']
        if g.vertex_count <= self.cfg.lemma_max_vertices:
            record['lemma2'] = all(chi_dot(induced_subgraph(g, s)).value <= value
                                   for s in range(g.full_mask + 1))
            record['lemma3'] = all(chi_dot(delete_vertices(g, i)).value < value
                                   for i in maximal_independent_sets(g) if i)
        if g.vertex_count <= self.cfg.oracle_max_vertices:
            record['oracle'] = max(len(c) for c in all_coverings(g)) == value
        record['ok'] = all(v for k, v in record.items() if isinstance(v, bool))
        return record


if __name__ == '__main__':
    sys.exit(1 if CoveringSweep().run() else 0)
