"""Exception types shared across the package."""


class VocaggError(Exception):
    """Base class for every error raised by this library."""


class ParseError(VocaggError):
    """Malformed document, numeral, or rule descriptor."""


class InvalidVocabulary(VocaggError):
    """A word partition that cannot be encoded (bad tiling, too few active words)."""


class ShapeMismatch(VocaggError):
    """Objects with incompatible word counts, agent counts, or lengths."""


class DomainMismatch(VocaggError):
    """Objects defined over different intervals were combined."""


class IndexOutOfRange(VocaggError):
    """An order-statistic rank or agent index outside its valid range."""


class ParityViolation(VocaggError):
    """Median positions requested for an odd word-boundary count with an even agent count."""


class EvenAgentCount(VocaggError):
    """The pooled-multiset rule needs an odd number of agents."""


class UnknownFixture(VocaggError):
    """No benchmark rule registered under the requested name."""


class InconsistentLabels(VocaggError):
    """Exemplar labels that contradict the linear order of the observations."""


class MalformedGaps(VocaggError):
    """Gap sequences whose left or right ends fail to be nondecreasing."""
