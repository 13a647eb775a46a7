"""Exception types shared across the package."""


class K3GaussError(Exception):
    """Base class for all errors raised by k3gauss."""


class InvalidInputError(K3GaussError, ValueError):
    """An argument violates a documented precondition."""


class LatticeError(InvalidInputError):
    """A Gram matrix or ample class fails the K3 Picard lattice checks."""


class DegenerateSquareError(InvalidInputError):
    """The class L - a*delta does not have positive square, so q(L - a*delta) <= 0."""

    def __init__(self, square: int, a: int):
        self.square = square
        self.a = a
        super().__init__(f"q(L - {a}*delta) = {square} <= 0; the class is not in the positive cone")


class BoundNotMetError(InvalidInputError):
    """A high-degree shortcut was called outside its degree hypothesis."""


class SearchCapExceeded(K3GaussError, RuntimeError):
    """A configured rank or search-size cap would be exceeded."""
