class HomkitError(Exception):
    """Base class of every error raised by homkit."""

    exit_code = 1


class UsageError(HomkitError):
    pass


class GraphFormatError(HomkitError):
    pass


class UnknownVertexError(HomkitError):
    pass


class NotIndependentError(HomkitError):
    pass


class InvalidCoveringError(HomkitError):
    pass


class GraphTooLargeError(HomkitError):
    pass


class InvalidCellError(HomkitError):
    pass


class CellCapExceeded(HomkitError):
    exit_code = 2

    def __init__(self, bound, vertex_count=None, n=None):
        self.bound = bound
        self.vertex_count = vertex_count
        self.n = n
        super().__init__(
            f'cell cap exceeded: more than {bound} cells '
            f'(graph on {vertex_count} vertices, n={n})')


class VerificationFinding(HomkitError):
    """A machine check failed. Never expected on valid input: it points at a bug here."""

    exit_code = 3


class FreeFaceViolation(VerificationFinding):

    def __init__(self, step, free_cell, second_coface):
        self.step = step
        self.free_cell = free_cell
        self.second_coface = second_coface
        super().__init__(
            f'collapse step {step}: {free_cell} is not free, '
            f'second coface {second_coface}')


class ChainComplexError(VerificationFinding):
    pass


class DecompositionError(VerificationFinding):
    pass
