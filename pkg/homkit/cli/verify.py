from homkit.cli.base_command import BaseCommand
from homkit.nerve import verify_theorem


class VerifyCommand(BaseCommand):
    name = 'verify'
    help = 'certify the (n - χ̇(G) - 1) and (n - d - 2) connectivity bounds'
    requires_n = True

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument('--inductive', action='store_true', default=None,
                            help='retrace the induction: collapses, pieces and nerve hypotheses')
        parser.add_argument('-m', type=int, default=None,
                            help='level for the nerve check (default: the claimed level)')

    def compute(self, g):
        depth = 'inductive' if self.cfg.inductive else 'direct'
        return verify_theorem(g, self.cfg.n, depth, self.cfg.m, self.cfg.cell_cap, self.cfg.dump_dir,
                              self.cfg.max_vertices)

    def to_dict(self, report):
        return report.to_dict()

    def to_text(self, report):
        lines = [
            f'chi_dot = {report.chi_dot}, max degree = {report.max_degree}',
            f'claimed_level = {report.claimed_level}, corollary_level = {report.corollary_level}',
            f'verdict = {report.verdict.describe()} ({report.verdict.certified})',
            f'base case: {report.base_case}',
        ]
        if report.depth == 'inductive':
            lines.append(f'pieces: {len(report.pieces)}, nerve hypotheses at m = {report.nerve_m}: '
                         f'{"satisfied" if report.nerve_hypotheses_satisfied else "not satisfied"}')
        lines += [f'FINDING {finding}' for finding in report.findings]
        lines.append('PASS' if report.passed else 'FAIL')
        return '\n'.join(lines)

    def exit_code(self, report):
        return 0 if report.passed else 3
