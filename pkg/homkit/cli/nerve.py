from homkit.cli.base_command import BaseCommand
from homkit.covering import chi_dot
from homkit.nerve import check_nerve_hypotheses, nerve_cover


class NerveCommand(BaseCommand):
    name = 'nerve'
    help = 'decompose Hom(G, K_n) by maximal independent sets and check the nerve hypotheses'
    requires_n = True

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument('-m', type=int, default=None,
                            help='connectivity asked of the members (default n - χ̇(G) - 1)')

    def compute(self, g):
        m = self.cfg.m
        if m is None:
            m = self.cfg.n - chi_dot(g, self.cfg.max_vertices).value - 1
        d = nerve_cover(g, self.cfg.n, self.cfg.cell_cap)
        return d, check_nerve_hypotheses(d, m)

    def to_dict(self, result):
        d, check = result
        return {
            'graph': self.graph_dict(d.graph),
            'n': d.n,
            'cells': len(d.whole),
            'members': len(d.family),
            'intersections': len(d.intersections),
            'check': check.to_dict(d.graph),
        }

    def to_text(self, result):
        d, check = result
        g = d.graph
        lines = [f'{len(d.family)} members, {len(d.intersections)} distinct intersections, m = {check.m}']
        for piece in check.pieces:
            lines.append(f'{piece.kind} [{" ".join(g.labels_of(piece.vertices))}]: '
                         f'{piece.cells} cells, level {piece.verdict.describe()} '
                         f'(needs {piece.required}) {"ok" if piece.ok else "FAIL"}')
        lines.append(f'nerve hypotheses satisfied: {"yes" if check.satisfied else "no"}')
        return '\n'.join(lines)
