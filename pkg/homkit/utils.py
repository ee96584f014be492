import json
import logging
import os
import sys
import time

import jsonlines
from scipy import sparse

LOG_FORMAT = '%(asctime)s %(levelname)s %(name)s: %(message)s'


def setup_logging(level='WARNING', log_file=None):
    root = logging.getLogger('homkit')
    root.setLevel(level)
    if not any(getattr(h, '_homkit', False) for h in root.handlers):
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        handler._homkit = True
        root.addHandler(handler)
    if log_file is not None:
        file_handler = logging.FileHandler(log_file)
        file_handler.setFormatter(logging.Formatter(LOG_FORMAT))
        root.addHandler(file_handler)
    return root


def to_json(obj):
    # key order is fixed by construction, so equal inputs give byte-identical output
    return json.dumps(obj, indent=2, ensure_ascii=False) + '\n'


def graph_to_dict(g):
    return {
        'labels': list(g.labels),
        'edges': [[g.labels[u], g.labels[v]] for u, v in g.edges()],
    }


def write_jsonl(path, records):
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    with jsonlines.open(path, 'w') as writer:
        for record in records:
            writer.write(record)


def dump_artifacts(dump_dir, complex_, chain):
    """Write the cells of a complex and its boundary matrices for offline inspection."""
    stamp = time.strftime('%Y-%m-%d-%H-%M-%S')
    out = os.path.join(dump_dir, f'n{complex_.n}-v{complex_.graph.vertex_count}-{stamp}')
    os.makedirs(out, exist_ok=True)
    write_jsonl(os.path.join(out, 'cells.jsonl'), complex_.to_dicts())
    for k, matrix in enumerate(chain.boundaries):
        sparse.save_npz(os.path.join(out, f'boundary_{k}.npz'), sparse.csc_matrix(matrix))
    logging.getLogger(__name__).error('artifacts dumped to %s', out)
    return out
