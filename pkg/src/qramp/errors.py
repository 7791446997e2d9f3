"""Exception hierarchy shared by the pipeline stages.

Each exception carries the exit code the command-line front end reports for it.
"""


class QrampError(Exception):
    exit_code = 1

    def to_json(self):
        return {"error": type(self).__name__, "message": str(self)}


class ParseError(QrampError):
    exit_code = 2


class ParameterViolation(QrampError, ValueError):
    exit_code = 2


class ModulusMismatch(QrampError, ValueError):
    pass


class FieldDivisionByZero(QrampError, ZeroDivisionError):
    pass


class IndexOutOfRange(QrampError, IndexError):
    pass


class NotNested(QrampError, ValueError):
    pass


class NotQualified(QrampError):
    pass


class InconsistentShares(QrampError):
    pass


class UncoveredCoordinate(QrampError, ValueError):
    pass


class NotMonotone(QrampError):
    exit_code = 3


class NotSelfDual(QrampError):
    exit_code = 3

    def __init__(self, witness):
        self.witness = tuple(witness)
        super().__init__(
            f"access structure is not self-dual: neither {list(self.witness)} "
            "nor its complement is qualified, or both are"
        )

    def to_json(self):
        d = super().to_json()
        d["witness"] = list(self.witness)
        return d


class TooManyParticipants(QrampError, ValueError):
    exit_code = 2


class SolverInternal(QrampError, RuntimeError):
    exit_code = 4


class VerificationMismatch(QrampError):
    exit_code = 5


class SimulationDisagreement(QrampError):
    exit_code = 6


class DimensionCap(QrampError):
    pass
