from homkit.cli.base_command import BaseCommand
from homkit.collapse import collapse_to_restriction, lemma4_collapse
from homkit.errors import UsageError
from homkit.graph import delete_vertices
from homkit.hom_complex import build_hom
from homkit.homology import homology


class CollapseCommand(BaseCommand):
    name = 'collapse'
    help = 'collapse Δ_I onto Δ\' and verify every step'
    requires_n = True

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument('--set', dest='set', default=None,
                            help='independent set I, comma-separated vertex labels')
        parser.add_argument('--keep', dest='keep', default=None,
                            help="subset I' of I that keeps the top color")

    def compute(self, g):
        if self.cfg.set is None:
            raise UsageError('collapse needs --set')
        i = self.resolve_set(g, self.cfg.set)
        keep = self.resolve_set(g, self.cfg.keep)
        trace = lemma4_collapse(g, self.cfg.n, i, keep, self.cfg.cell_cap)
        restricted = collapse_to_restriction(trace, i, keep, self.cfg.cell_cap).complex
        matches_hom = None
        if not keep:
            target = build_hom(delete_vertices(g, i), self.cfg.n - 1, self.cfg.cell_cap)
            matches_hom = restricted.forget_top_color().cells == target.cells
        preserved = homology(trace.start) == homology(trace.end)
        if not preserved:
            self.logger.error('collapse changed homology on %s', g)
        return g, i, keep, trace, restricted, matches_hom, preserved

    def to_dict(self, result):
        g, i, keep, trace, restricted, matches_hom, preserved = result
        return {
            'graph': self.graph_dict(g),
            'n': self.cfg.n,
            'set': g.labels_of(i),
            'keep': g.labels_of(keep),
            'start_cells': len(trace.start),
            'end_cells': len(trace.end),
            'steps': trace.to_json(),
            'restricted': {
                'graph': self.graph_dict(restricted.graph),
                'cells': len(restricted),
                'matches_hom': matches_hom,
            },
            'homology_preserved': preserved,
        }

    def to_text(self, result):
        g, i, keep, trace, restricted, matches_hom, preserved = result
        lines = []
        for k, step in enumerate(trace.to_json(), 1):
            free, cofree = step['removed_pair']
            lines.append(f'step {k} at {step["vertex"]}: {_fmt(free)} with {_fmt(cofree)}')
        lines.append(f'{len(trace.start)} -> {len(trace.end)} cells in {len(trace)} verified steps')
        if matches_hom is not None:
            lines.append(f'end ≅ Hom(G - I, K_{self.cfg.n - 1}): {"yes" if matches_hom else "NO"}')
        lines.append(f'homology preserved: {"yes" if preserved else "NO"}')
        return '\n'.join(lines)

    def exit_code(self, result):
        *_, matches_hom, preserved = result
        return 0 if preserved and matches_hom is not False else 3


def _fmt(assignment):
    return '(' + ', '.join(f'{v}:{{{",".join(map(str, c))}}}' for v, c in assignment.items()) + ')'
