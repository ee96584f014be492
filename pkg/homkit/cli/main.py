"""The ``homkit`` command line."""
import sys

from homkit.cli.base_command import ArgumentParser, common_arguments, load_config
from homkit.cli.chi_dot import ChiDotCommand
from homkit.cli.collapse import CollapseCommand
from homkit.cli.hom import HomCommand
from homkit.cli.homology import HomologyCommand
from homkit.cli.mis import MisCommand
from homkit.cli.nerve import NerveCommand
from homkit.cli.verify import VerifyCommand
from homkit.errors import HomkitError

COMMANDS = {
    cls.name: cls for cls in (ChiDotCommand, MisCommand, HomCommand, HomologyCommand,
                              CollapseCommand, NerveCommand, VerifyCommand)
}


def build_parser():
    parser = ArgumentParser(prog='homkit', description='Graph coloring complexes Hom(G, K_n).')
    subparsers = parser.add_subparsers(dest='command', required=True, parser_class=ArgumentParser)
    common = common_arguments()
    for name, cls in COMMANDS.items():
        sub = subparsers.add_parser(name, parents=[common], help=cls.help)
        cls.add_arguments(sub)
    return parser


def run_cli(argv=None, stdin=None, stdout=None, stderr=None):
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        cfg = load_config(args)
        return COMMANDS[cfg.command](cfg, stdin, stdout).run()
    except HomkitError as e:
        stderr.write(f'homkit: error: {e}\n')
        return e.exit_code
    except OSError as e:
        stderr.write(f'homkit: error: {e}\n')
        return 1
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 0


def main():
    sys.exit(run_cli())


if __name__ == '__main__':
    main()
