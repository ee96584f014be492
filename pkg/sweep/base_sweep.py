import argparse
import copy
import logging
import os
import time

from omegaconf import OmegaConf
from tqdm import tqdm

from homkit.dataset.build_jsonl import load_graph_jsonl
from homkit.dataset.small_graphs import atlas_graphs
from homkit.utils import setup_logging, write_jsonl


class BaseSweep:
    name = 'sweep'
    default_config = 'config/sweep/theorem.yaml'

    def __init__(self, argv=None):
        self.cfg = self.parse_args(argv)
        self.logger = logging.getLogger(f'homkit.sweep.{self.name}')

    def parse_args(self, argv=None):
        parser = argparse.ArgumentParser(description=f'Run the {self.name} sweep.')
        parser.add_argument('--config', type=str, default=self.default_config)
        parser.add_argument('--output_dir', type=str, default=None)
        args = parser.parse_args(argv)

        cfg = OmegaConf.load(args.config)
        output_dir = args.output_dir
        for k, v in cfg.items():
            setattr(args, k, v)
        if output_dir is not None:
            args.output_dir = output_dir

        dt_string = time.strftime('%Y-%m-%d-%H-%M')
        args.output_dir = os.path.join(args.output_dir, dt_string)
        return args

    def init_context(self):
        os.makedirs(self.cfg.output_dir, exist_ok=True)
        save_cfg = vars(copy.deepcopy(self.cfg))
        with open(os.path.join(self.cfg.output_dir, 'config.yaml'), 'w') as f:
            OmegaConf.save(OmegaConf.create(save_cfg), f)
        setup_logging(getattr(self.cfg, 'log_level', 'INFO'),
                      log_file=os.path.join(self.cfg.output_dir, 'log.txt'))

    def build_data(self):
        graph_file = getattr(self.cfg, 'graph_file', None)
        if graph_file:
            graphs = load_graph_jsonl(graph_file)
        else:
            graphs = atlas_graphs(self.cfg.max_vertices, getattr(self.cfg, 'min_vertices', 0),
                                  getattr(self.cfg, 'connected', False))
        self.logger.info('loaded %d graphs', len(graphs))
        return graphs

    def instances(self, graphs):
        raise NotImplementedError

    def run_instance(self, instance):
        raise NotImplementedError

    def run(self):
        self.init_context()
        graphs = self.build_data()
        records = []
        failures = 0
        for instance in tqdm(list(self.instances(graphs)), desc=self.name):
            record = self.run_instance(instance)
            records.append(record)
            if not record['ok']:
                failures += 1
                self.logger.error('finding: %s', record)
        write_jsonl(os.path.join(self.cfg.output_dir, 'results.jsonl'), records)
        self.logger.info('Current time: %s, %d instances, %d findings',
                         time.strftime('%Y-%m-%d-%H-%M-%S'), len(records), failures)
        return failures
