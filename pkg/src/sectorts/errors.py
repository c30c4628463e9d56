"""Exception hierarchy.

Every error carries an ``exit_code`` so the command-line front end can map a
failure to a stable process status without inspecting messages.
"""


class AnalysisError(Exception):
    exit_code = 1


class EmptyDatasetError(AnalysisError):
    exit_code = 3


class GapMonthError(AnalysisError):
    exit_code = 4

    def __init__(self, month):
        super().__init__(f"no daily records for month {month}")
        self.month = month


class ParseError(AnalysisError):
    exit_code = 5

    def __init__(self, line, token):
        super().__init__(f"line {line}: cannot parse {token!r} as a number")
        self.line = line
        self.token = token


class InvalidWindowError(AnalysisError):
    exit_code = 6


class EmptyWindowError(AnalysisError):
    exit_code = 7


class InsufficientOverlapError(AnalysisError):
    exit_code = 8


class SeriesTooShortError(AnalysisError):
    exit_code = 9


class UnexpectedMissingError(AnalysisError):
    exit_code = 10


class IncompleteCycleError(AnalysisError):
    exit_code = 11


class ZeroVarianceError(AnalysisError):
    exit_code = 12


class InvalidDfError(AnalysisError):
    exit_code = 13


class LagExceedsDataError(AnalysisError):
    exit_code = 14


class InsufficientDataError(AnalysisError):
    exit_code = 15


class MissingPredictorError(AnalysisError):
    exit_code = 16

    def __init__(self, month):
        super().__init__(f"predictor not observed in {month}")
        self.month = month


class MissingActualError(AnalysisError):
    exit_code = 22

    def __init__(self, month):
        super().__init__(f"dependent series not observed in {month}")
        self.month = month


class ZeroActualError(AnalysisError):
    """Percent error is undefined when the actual value is zero."""

    exit_code = 17

    def __init__(self, month):
        super().__init__(f"actual value is zero in {month}")
        self.month = month


class WindowMismatchError(AnalysisError):
    exit_code = 18


class UnknownDatasetError(AnalysisError):
    exit_code = 19


class ConfigError(AnalysisError):
    exit_code = 20


class OutputError(AnalysisError):
    exit_code = 21
