class CirculantError(Exception):
    """
    Base class of every error raised by the circulant package.
    """


class GeneratorError(CirculantError, ValueError):
    """
    A generator set that is not a valid circulant connection set.
    """


class SpecError(CirculantError, ValueError):
    """
    A circulant or C(m,p) parameter set outside the domain of the requested operation.
    """


class GraphError(CirculantError, ValueError):
    """
    A malformed graph: self loop, duplicate edge or endpoint out of range.
    """


class DegreeMismatchError(CirculantError, ValueError):
    """
    Two permutations (or a permutation and a graph) of different degree.
    """


class PermutationError(CirculantError, ValueError):
    """
    An image array that is not a bijection of 0..n-1.
    """


class LabelingError(CirculantError, ValueError):
    """
    A labeling that does not fit the graph or the operation.
    """


class NonRainbowBlockError(LabelingError):
    """
    A block of the module partition carries the same label twice.

    The two equally labeled vertices are kept on the error: swapping them is itself a
    nontrivial automorphism that preserves the labeling.
    """

    def __init__(self, block, u, v):
        super().__init__(f"non-rainbow block M_{block}: vertices {u} and {v} share a label")
        self.block = block
        self.u = u
        self.v = v


class NoSmallLabelingError(CirculantError, ValueError):
    """
    No (m+1)-labeling exists for the requested graph.
    """


class TargetsError(CirculantError, ValueError):
    """
    A sequence of target distinguishing numbers that a family cannot be built for.
    """


class ConfigError(CirculantError, ValueError):
    """
    An environment override that cannot be parsed.
    """


class CapExceededError(CirculantError, RuntimeError):
    """
    A search produced more results (or tested more candidates) than its cap allows.
    """

    def __init__(self, what, cap):
        super().__init__(f"cap exceeded: more than {cap:,} {what}")
        self.what = what
        self.cap = cap


class BoundExceededError(CirculantError, RuntimeError):
    """
    No labeling with at most r_max labels is distinguishing.
    """

    def __init__(self, r_max):
        super().__init__(f"exceeds bound: no distinguishing labeling with at most {r_max} labels")
        self.r_max = r_max


class InconsistencyError(CirculantError, RuntimeError):
    """
    Two independent computations disagree; this indicates a bug, not bad input.
    """
