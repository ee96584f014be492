"""Lemma 4 collapses for every maximal independent set of every small graph."""
import sys

from sweep.base_sweep import BaseSweep
from homkit.collapse import collapse_to_restriction, lemma4_collapse
from homkit.errors import VerificationFinding
from homkit.graph import delete_vertices, maximal_independent_sets, serialize_graph
from homkit.hom_complex import build_hom
from homkit.homology import homology, order_complex_oracle


class CollapseSweep(BaseSweep):
    name = 'collapse'
    default_config = 'config/sweep/collapse.yaml'

    def instances(self, graphs):
        for g in graphs:
            for n in range(1, self.cfg.max_colors + 1):
                for i in maximal_independent_sets(g):
                    yield g, n, i

    def run_instance(self, instance):
        g, n, i = instance
        record = {'graph6': serialize_graph(g, 'graph6').strip(), 'n': n, 'set': g.labels_of(i)}
        try:
            trace = lemma4_collapse(g, n, i, 0, self.cfg.cell_cap)
            restricted = collapse_to_restriction(trace, i, 0, self.cfg.cell_cap).complex
        except VerificationFinding as e:
            record.update(ok=False, error=str(e))
            return record
        target = build_hom(delete_vertices(g, i), n - 1, self.cfg.cell_cap)
        start, end = homology(trace.start), homology(trace.end)
        record.update(
            steps=len(trace),
            start_cells=len(trace.start),
            end_cells=len(trace.end),
            accounting=len(trace.start) - 2 * len(trace) == len(trace.end),
            homology_preserved=start == end,
            matches_hom=restricted.forget_top_color().cells == target.cells,
        )
        for key, piece, report in (('oracle_start', trace.start, start), ('oracle_end', trace.end, end)):
            if len(piece) <= self.cfg.oracle_max_cells:
                record[key] = order_complex_oracle(piece, self.cfg.oracle_max_cells) == report
        record['ok'] = record['accounting'] and record['homology_preserved'] and record['matches_hom'] \
            and record.get('oracle_start', True) and record.get('oracle_end', True)
        return record


if __name__ == '__main__':
    sys.exit(1 if CollapseSweep().run() else 0)
