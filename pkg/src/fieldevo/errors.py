"""Exception hierarchy.

Parse and input errors derive from :class:`InputError`; failures of an
analysis on well-formed input derive from :class:`AnalysisError`. The CLI
maps the two families to exit codes 2 and 1.
"""


class FieldEvoError(Exception):
    pass


class InputError(FieldEvoError, ValueError):
    pass


class AnalysisError(FieldEvoError, ValueError):
    pass


# corpus ingestion
class MalformedHeader(InputError):
    pass


class MalformedRow(InputError):
    pass


class NegativeCount(InputError):
    pass


class DuplicateCell(InputError):
    pass


class InconsistentDocuments(InputError):
    pass


class EmptyCorpus(InputError):
    pass


class InvalidSpec(InputError):
    pass


# analysis
class EmptyRange(AnalysisError):
    pass


class InvalidThreshold(AnalysisError):
    pass


class InsufficientData(AnalysisError):
    pass


class DegenerateSeries(AnalysisError):
    pass


class DegenerateFit(AnalysisError):
    pass


class NoModelFits(AnalysisError):
    pass


class OutOfDomain(AnalysisError):
    pass
