"""Exception hierarchy shared by every module of the package."""


class KakimizuError(Exception):
    """Base class for all errors raised by this package."""


class CoefficientTooSmall(KakimizuError, ValueError):
    def __init__(self, index: int, value: int):
        self.index = index
        self.value = value
        super().__init__(f"twist coefficient a_{index} = {value} has |a_j| < 2")


class EmptySequence(KakimizuError, ValueError):
    def __init__(self):
        super().__init__("twist sequence must contain at least one coefficient")


class OddLength(KakimizuError, ValueError):
    def __init__(self, m: int):
        self.m = m
        super().__init__(f"twist sequence of odd length {m} does not define a knot")


class SlopeDivisionByZero(KakimizuError, ZeroDivisionError):
    pass


class NonpositiveGenus(KakimizuError, ValueError):
    def __init__(self, g):
        self.g = g
        super().__init__(f"genus must be a positive integer, got {g!r}")


class NTooLarge(KakimizuError, ValueError):
    def __init__(self, n: int, cap: int):
        self.n = n
        self.cap = cap
        super().__init__(f"n = {n} exceeds the cap {cap}")


class NotASink(KakimizuError, ValueError):
    def __init__(self, j: int):
        self.j = j
        super().__init__(f"v_{j} is not a sink")


class UnknownVertex(KakimizuError, KeyError):
    def __init__(self, label):
        self.label = label
        super().__init__(f"unknown vertex {label!r}")

    def __str__(self):
        return self.args[0]


class Disconnected(KakimizuError, RuntimeError):
    pass


class StepNotAnEdge(KakimizuError, RuntimeError):
    def __init__(self, k: int, a: str, b: str):
        self.k = k
        self.a = a
        self.b = b
        super().__init__(f"step {k} ({a!r} -> {b!r}) is not an edge")


class BudgetExceeded(KakimizuError, RuntimeError):
    pass


class ConfigInvalid(KakimizuError, ValueError):
    pass


class BadFormatVersion(KakimizuError, ValueError):
    pass


class MalformedDocument(KakimizuError, ValueError):
    pass


class InvariantViolation(KakimizuError, ValueError):
    pass
