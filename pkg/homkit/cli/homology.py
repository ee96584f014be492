from homkit.cli.base_command import BaseCommand
from homkit.hom_complex import build_hom
from homkit.homology import homological_connectivity, homology, order_complex_oracle


class HomologyCommand(BaseCommand):
    name = 'homology'
    help = 'reduced integral homology of Hom(G, K_n)'
    requires_n = True

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument('--oracle', action='store_true', default=None,
                            help='cross-check against the order complex')

    def compute(self, g):
        c = build_hom(g, self.cfg.n, self.cfg.cell_cap)
        report = homology(c)
        oracle = None
        if self.cfg.oracle:
            oracle = order_complex_oracle(c, self.cfg.oracle_max_cells)
            if oracle != report:
                self.logger.error('order complex disagrees on Hom(%s, K_%d): %s vs %s',
                                  g, c.n, oracle.describe(), report.describe())
        return c, report, oracle

    def to_dict(self, result):
        c, report, oracle = result
        return {
            'graph': self.graph_dict(c.graph),
            'n': c.n,
            'cells': len(c),
            'homology': report.to_dict(),
            'connectivity': homological_connectivity(report, not c.is_empty).to_dict(),
            'oracle': None if oracle is None else {
                'homology': oracle.to_dict(),
                'agrees': oracle == report,
            },
        }

    def to_text(self, result):
        _, report, oracle = result
        text = report.describe()
        if oracle is not None:
            text += '\noracle: ' + ('agrees' if oracle == report else 'DISAGREES: ' + oracle.describe())
        return text

    def exit_code(self, result):
        _, report, oracle = result
        return 3 if oracle is not None and oracle != report else 0
