"""Exception hierarchy.

Every error carries a stable machine-readable ``code`` used in JSON reports
and an ``exit_code`` used by the command line tool (1 = verification
failure, 2 = bad input).
"""


class FoxcohError(Exception):
    code = "ERROR"
    exit_code = 2

    def to_dict(self):
        return {"code": self.code, "message": str(self)}


class InputError(FoxcohError):
    code = "INPUT_ERROR"


class ParseError(InputError):
    code = "SYNTAX_ERROR"

    def __init__(self, message, text=None, position=None):
        if position is not None:
            message = f"{message} at position {position}"
            if text is not None:
                message += f" in {text!r}"
        super().__init__(message)
        self.text = text
        self.position = position

    def to_dict(self):
        d = super().to_dict()
        if self.position is not None:
            d["position"] = self.position
        return d


class UnknownGeneratorError(InputError):
    code = "UNKNOWN_GENERATOR"


class NonConstantExpressionError(ParseError):
    code = "NON_CONSTANT_EXPRESSION"


class ManifestError(InputError):
    code = "BAD_MANIFEST"


class NoInvariantFormError(InputError):
    code = "NO_INVARIANT_FORM"


class AmbiguousFormError(InputError):
    code = "AMBIGUOUS_FORM"


class DegenerateFormError(InputError):
    code = "DEGENERATE_FORM"


class NonHermitianError(InputError):
    code = "NOT_HERMITIAN"


class VerificationError(FoxcohError):
    code = "VERIFICATION_FAILED"
    exit_code = 1


class NotInGroupError(VerificationError):
    code = "NOT_IN_GROUP"


class NotARepresentationError(VerificationError):
    code = "NOT_A_REPRESENTATION"


class SubspaceNotPreservedError(VerificationError):
    code = "SUBSPACE_NOT_PRESERVED"


class CheckFailedError(VerificationError):
    code = "CHECK_FAILED"
