from __future__ import annotations


class SchubertError(ValueError):
    """Base class for every domain error; `exit_code` is what the CLI returns."""

    exit_code = 2


# input errors (exit 2)


class InvalidLetter(SchubertError):
    pass


class InvalidDescent(SchubertError):
    pass


class InvalidParam(SchubertError):
    pass


class InvalidHookParams(SchubertError):
    pass


class NotGrassmannian(SchubertError):
    pass


class DoesNotFit(SchubertError):
    pass


class NotReduced(SchubertError):
    pass


class NotDistinctWord(SchubertError):
    pass


class DeskScaleExceeded(SchubertError):
    pass


class DimensionMismatch(SchubertError):
    pass


class ZeroVector(SchubertError):
    pass


class NotPointed(SchubertError):
    pass


class NotToric(SchubertError):
    exit_code = 3


# verification errors (exit 4)


class VerificationFailed(SchubertError):
    exit_code = 4


class NotGorenstein(VerificationFailed):
    def __init__(self, cone_index: int, reason: str):
        super().__init__(f"anticanonical system of maximal cone {cone_index} is {reason}")
        self.cone_index = cone_index
        self.reason = reason


class DegenerateCone(VerificationFailed):
    pass


class MismatchedData(VerificationFailed):
    pass


class NotUnimodularPiece(VerificationFailed):
    pass


class ClassifierBug(VerificationFailed):
    pass


class OracleDisagreement(SchubertError):
    exit_code = 5

    def __init__(self, oracle: str, counterexample: str):
        super().__init__(f"{oracle}: {counterexample}")
        self.oracle = oracle
        self.counterexample = counterexample


__all__ = [
    "SchubertError",
    "InvalidLetter",
    "InvalidDescent",
    "InvalidParam",
    "InvalidHookParams",
    "NotGrassmannian",
    "DoesNotFit",
    "NotReduced",
    "NotDistinctWord",
    "DeskScaleExceeded",
    "DimensionMismatch",
    "ZeroVector",
    "NotPointed",
    "NotToric",
    "VerificationFailed",
    "NotGorenstein",
    "DegenerateCone",
    "MismatchedData",
    "NotUnimodularPiece",
    "ClassifierBug",
    "OracleDisagreement",
]
