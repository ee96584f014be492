import argparse

import jsonlines

from homkit.dataset.small_graphs import atlas_graphs
from homkit.graph import parse_graph, serialize_graph
from homkit.utils import write_jsonl


def build_atlas_jsonl(path, max_vertices, min_vertices=0, connected=False):
    records = []
    for g in atlas_graphs(max_vertices, min_vertices, connected):
        records.append({
            'graph6': serialize_graph(g, 'graph6').strip(),
            'vertices': g.vertex_count,
            'edges': len(g.edges()),
        })
    write_jsonl(path, records)
    return len(records)


def load_graph_jsonl(path):
    with jsonlines.open(path) as reader:
        return [parse_graph(record['graph6'], 'graph6') for record in reader]


if __name__ == '__main__':
    parser = argparse.ArgumentParser(description='Write the small-graph atlas as jsonl.')
    parser.add_argument('output')
    parser.add_argument('--max-vertices', type=int, default=4)
    parser.add_argument('--min-vertices', type=int, default=0)
    parser.add_argument('--connected', action='store_true')
    args = parser.parse_args()
    count = build_atlas_jsonl(args.output, args.max_vertices, args.min_vertices, args.connected)
    print(f'{count} graphs written to {args.output}')
