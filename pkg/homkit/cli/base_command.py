import argparse
import logging
import os
import sys
from dataclasses import dataclass
from typing import Optional

from omegaconf import OmegaConf
from omegaconf.errors import OmegaConfBaseException

from homkit.covering import MAX_VERTICES
from homkit.dataset.small_graphs import GRAPH_NAME, named_graph
from homkit.errors import UsageError
from homkit.graph import FORMATS, Graph, VertexSet, parse_graph
from homkit.hom_complex import DEFAULT_CELL_CAP
from homkit.homology import DEFAULT_ORACLE_MAX_CELLS
from homkit.utils import graph_to_dict, setup_logging, to_json

CELL_CAP_ENV = 'HOMKIT_CELL_CAP'


@dataclass
class RunConfig:
    command: Optional[str] = None
    input: str = '-'
    format: str = 'edge-list'
    n: Optional[int] = None
    set: Optional[str] = None
    keep: Optional[str] = None
    m: Optional[int] = None
    cell_cap: int = DEFAULT_CELL_CAP
    oracle: bool = False
    oracle_max_cells: int = DEFAULT_ORACLE_MAX_CELLS
    max_vertices: int = MAX_VERTICES
    inductive: bool = False
    output: str = 'text'
    log_level: str = 'WARNING'
    dump_dir: Optional[str] = None


class ArgumentParser(argparse.ArgumentParser):
    """Usage errors exit with 1; argparse's own status 2 means cap exceeded here."""

    def error(self, message):
        raise UsageError(f'{self.prog}: {message}')


def common_arguments() -> argparse.ArgumentParser:
    parser = ArgumentParser(add_help=False)
    parser.add_argument('input', nargs='?', default=None,
                        help="graph file, '-' for stdin, or a name such as K3, P4, C5, E2")
    parser.add_argument('--format', choices=FORMATS, default=None)
    parser.add_argument('-n', type=int, default=None, help='number of colors of K_n')
    parser.add_argument('--cell-cap', dest='cell_cap', type=int, default=None)
    parser.add_argument('--json', dest='output', action='store_const', const='json', default=None)
    parser.add_argument('--config', default=None, help='yaml file layered over the defaults')
    parser.add_argument('--log-level', dest='log_level', default=None)
    parser.add_argument('--dump-dir', dest='dump_dir', default=None)
    return parser


def load_config(args: argparse.Namespace):
    cfg = OmegaConf.structured(RunConfig)
    if args.config:
        try:
            cfg = OmegaConf.merge(cfg, OmegaConf.load(args.config))
        except OmegaConfBaseException as e:
            raise UsageError(f'bad config {args.config}: {e}') from None
    if os.environ.get(CELL_CAP_ENV):
        try:
            cfg.cell_cap = int(os.environ[CELL_CAP_ENV])
        except ValueError:
            raise UsageError(f'{CELL_CAP_ENV} must be an integer') from None
    flags = {k: v for k, v in vars(args).items() if k != 'config' and v is not None}
    cfg = OmegaConf.merge(cfg, flags)
    if cfg.cell_cap < 1:
        raise UsageError('cell_cap must be at least 1')
    if not 1 <= cfg.max_vertices <= MAX_VERTICES:
        raise UsageError(f'max_vertices must lie in 1..{MAX_VERTICES}')
    return cfg


class BaseCommand:
    name = None
    help = ''
    requires_n = False

    def __init__(self, cfg, stdin=None, stdout=None):
        self.cfg = cfg
        self.stdin = stdin or sys.stdin
        self.stdout = stdout or sys.stdout
        self.logger = logging.getLogger(f'homkit.cli.{self.name}')

    @classmethod
    def add_arguments(cls, parser):
        pass

    def load_graph(self) -> Graph:
        if not os.path.exists(self.cfg.input) and GRAPH_NAME.fullmatch(self.cfg.input):
            return named_graph(self.cfg.input, letters=True)
        if self.cfg.input == '-':
            text = self.stdin.read()
        else:
            with open(self.cfg.input) as f:
                text = f.read()
        return parse_graph(text, self.cfg.format)

    def resolve_set(self, g: Graph, text: Optional[str]) -> VertexSet:
        if not text:
            return 0
        mask = 0
        for token in text.split(','):
            if token.strip():
                mask |= 1 << g.resolve(token.strip())
        return mask

    def graph_dict(self, g: Graph) -> dict:
        return graph_to_dict(g)

    def compute(self, g: Graph):
        raise NotImplementedError

    def to_dict(self, result) -> dict:
        raise NotImplementedError

    def to_text(self, result) -> str:
        raise NotImplementedError

    def exit_code(self, result) -> int:
        return 0

    def run(self) -> int:
        setup_logging(self.cfg.log_level)
        if self.requires_n and self.cfg.n is None:
            raise UsageError(f'{self.name} needs -n')
        if self.cfg.n is not None and self.cfg.n < 1:
            raise UsageError('-n must be at least 1')
        g = self.load_graph()
        self.logger.info('loaded %s', g)
        result = self.compute(g)
        if self.cfg.output == 'json':
            self.stdout.write(to_json(self.to_dict(result)))
        else:
            self.stdout.write(self.to_text(result).rstrip('\n') + '\n')
        return self.exit_code(result)
