from homkit.cli.base_command import BaseCommand
from homkit.hom_complex import build_hom


class HomCommand(BaseCommand):
    name = 'hom'
    help = 'cell census of Hom(G, K_n) per dimension'
    requires_n = True

    def compute(self, g):
        return build_hom(g, self.cfg.n, self.cfg.cell_cap)

    def to_dict(self, c):
        return {
            'graph': self.graph_dict(c.graph),
            'n': c.n,
            'cells': len(c),
            'census': c.census(),
            'euler_characteristic': c.euler_characteristic(),
        }

    def to_text(self, c):
        lines = [f'Hom(G, K_{c.n}): {len(c)} cells']
        lines += [f'dim {k}: {count}' for k, count in enumerate(c.census())]
        lines.append(f'euler characteristic: {c.euler_characteristic()}')
        return '\n'.join(lines)
