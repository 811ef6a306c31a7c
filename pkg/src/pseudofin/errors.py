"""Exception types raised by the library and surfaced by the CLI."""


class PseudofinError(Exception):
    """Base class for all library errors."""


class InputError(PseudofinError):
    """Bad user input; the CLI maps these to exit code 2."""


class RangeError(InputError):
    pass


class AssociativityError(InputError):
    def __init__(self, triple):
        self.triple = tuple(int(t) for t in triple)
        a, b, c = self.triple
        super().__init__(f"(a*b)*c != a*(b*c) for (a, b, c) = ({a}, {b}, {c})")


class DegreeMismatch(InputError):
    pass


class CapExceeded(PseudofinError):
    pass


class EmptyGenerators(InputError):
    pass


class NotABand(InputError):
    pass


class NotARightIdeal(InputError):
    pass


class NotACongruence(InputError):
    pass


class NotAnAct(InputError):
    pass


class NotOrthodox(InputError):
    pass


class IllDefinedAction(PseudofinError):
    """Internal consistency guard: an induced action is not well defined."""


class DecompositionError(PseudofinError):
    """Internal consistency guard: Rees coordinates failed verification."""


class CompatibilityError(InputError):
    def __init__(self, witness):
        self.witness = tuple(int(w) for w in witness)
        j, s, i = self.witness
        super().__init__(f"p[j*s, i] != p[j, s*i] for (j, s, i) = ({j}, {s}, {i})")


class GeneratorConditionError(InputError):
    pass


class ConditionError(InputError):
    def __init__(self, condition, message):
        self.condition = condition
        super().__init__(f"condition ({condition}) fails: {message}")


class SearchBudgetExceeded(PseudofinError):
    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class ParseError(InputError):
    pass


class UnknownElement(InputError):
    pass


class NotAMonoid(InputError):
    pass
