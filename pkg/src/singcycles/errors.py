"""Exception hierarchy.

Three families, matching the CLI exit codes:

* :class:`InputError` -- malformed input (exit 1)
* :class:`PreconditionError` -- a mathematical precondition does not hold (exit 2)
* :class:`GenericityFailure` -- random slicing never stabilised (exit 3)
"""


class SingCyclesError(Exception):
    pass


class InputError(SingCyclesError, ValueError):
    pass


class PreconditionError(SingCyclesError):
    pass


class PolySyntaxError(InputError):
    def __init__(self, message, text="", position=0):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}")


class UnknownVariable(InputError):
    pass


class ArityMismatch(InputError):
    pass


class RingMismatch(InputError):
    pass


class LocalOrderUnsupported(InputError):
    pass


class GlobalOrderUnsupported(InputError):
    pass


class NotHomogeneous(InputError):
    pass


class EmptyIdeal(InputError):
    pass


class NonIsolated(PreconditionError):
    pass


class NotICIS(PreconditionError):
    pass


class MultipleSingularFibres(PreconditionError):
    pass


class NonUniformDegrees(PreconditionError):
    pass


class UnsupportedComponent(PreconditionError):
    pass


class PositiveDimensionalCritical(PreconditionError):
    pass


class CheckFailed(PreconditionError):
    """A verification job ran to completion and the identity did not hold."""


class GenericityFailure(SingCyclesError):
    pass
