class SemigroupError(ValueError):
    """Base class for every domain error raised by nsgap."""


class EmptyInput(SemigroupError):
    def __init__(self):
        super().__init__("at least one generator is required")


class InvalidGenerator(SemigroupError):
    def __init__(self, generator):
        self.generator = generator
        super().__init__(f"generators must be positive integers, got {generator}")


class GcdNotOne(SemigroupError):
    """The generators span a proper subgroup, so the complement is infinite."""

    def __init__(self, gcd):
        self.gcd = gcd
        super().__init__(f"gcd of generators is {gcd}, not 1")


class NotAMember(SemigroupError):
    def __init__(self, value, semigroup=None):
        self.value = value
        where = f" of {semigroup}" if semigroup is not None else ""
        super().__init__(f"{value} is not a nonzero element{where}")


class SemigroupTooLarge(SemigroupError):
    def __init__(self, size, limit):
        self.size = size
        self.limit = limit
        super().__init__(
            f"computation needs a table of {size} entries, above the limit of {limit}"
        )


class NegativeExponent(SemigroupError):
    def __init__(self, exponent):
        self.exponent = exponent
        super().__init__(f"negative exponent {exponent} in a polynomial multiset")


class BadParameters(SemigroupError):
    pass


class InvalidModulus(BadParameters):
    def __init__(self, modulus):
        self.modulus = modulus
        super().__init__(f"modulus must be a positive integer, got {modulus}")


class InvalidForm(SemigroupError):
    pass


class NoClosedForm(SemigroupError):
    pass
