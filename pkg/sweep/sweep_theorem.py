"""Connectivity of Hom(G, K_n) against n - χ̇(G) - 1 and n - d - 2."""
import sys

from sweep.base_sweep import BaseSweep
from homkit.errors import CellCapExceeded
from homkit.graph import chromatic_number, serialize_graph
from homkit.hom_complex import build_hom
from homkit.homology import order_complex_oracle
from homkit.nerve import verify_theorem


class TheoremSweep(BaseSweep):
    name = 'theorem'
    default_config = 'config/sweep/theorem.yaml'

    def instances(self, graphs):
        for g in graphs:
            for n in range(chromatic_number(g), self.cfg.max_colors + 1):
                yield g, n

    def run_instance(self, instance):
        g, n = instance
        record = {'graph6': serialize_graph(g, 'graph6').strip(), 'n': n}
        try:
            report = verify_theorem(g, n, self.cfg.depth, cell_cap=self.cfg.cell_cap,
                                    dump_dir=getattr(self.cfg, 'dump_dir', None))
        except CellCapExceeded as e:
            self.logger.info('skipping %s', e)
            record.update(ok=True, skipped=str(e))
            return record
        record.update(
            chi_dot=report.chi_dot,
            claimed_level=report.claimed_level,
            corollary_level=report.corollary_level,
            level=report.verdict.level,
            theorem=report.verdict.at_least(report.claimed_level),
            corollary=report.verdict.at_least(report.corollary_level),
            nerve=report.nerve_hypotheses_satisfied,
            findings=list(report.findings),
        )
        if report.cells <= self.cfg.oracle_max_cells:
            c = build_hom(g, n, self.cfg.cell_cap)
            record['oracle'] = order_complex_oracle(c, self.cfg.oracle_max_cells) == report.homology
        record['ok'] = report.passed and record['theorem'] and record['corollary'] \
            and record.get('oracle', True)
        return record


if __name__ == '__main__':
    sys.exit(1 if TheoremSweep().run() else 0)
