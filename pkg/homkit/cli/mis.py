from homkit.cli.base_command import BaseCommand
from homkit.graph import maximal_independent_sets


class MisCommand(BaseCommand):
    name = 'mis'
    help = 'maximal independent sets in vertex order'

    def compute(self, g):
        return g, maximal_independent_sets(g)

    def to_dict(self, result):
        g, sets = result
        return {
            'graph': self.graph_dict(g),
            'maximal_independent_sets': [g.labels_of(s) for s in sets],
        }

    def to_text(self, result):
        g, sets = result
        return '\n'.join('[' + ' '.join(g.labels_of(s)) + ']' for s in sets)
