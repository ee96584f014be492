from homkit.cli.base_command import BaseCommand
from homkit.covering import chi_dot
from homkit.graph import chromatic_number, max_degree


class ChiDotCommand(BaseCommand):
    name = 'chi-dot'
    help = 'χ̇(G) with a witness covering'

    def compute(self, g):
        return g, chi_dot(g, self.cfg.max_vertices)

    def to_dict(self, result):
        g, res = result
        return {
            'graph': self.graph_dict(g),
            'chi_dot': res.value,
            'witness': res.witness.labelled(),
            'chromatic_number': chromatic_number(g),
            'max_degree': max_degree(g),
        }

    def to_text(self, result):
        _, res = result
        return f'chi_dot = {res.value}; witness: {res.witness}'
