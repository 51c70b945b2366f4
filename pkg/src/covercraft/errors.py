class CoverError(Exception):
    """Base class for errors raised by covercraft."""


class InvalidBase(CoverError, ValueError):
    pass


class NotEffective(CoverError, ValueError):
    def __init__(self, divisor):
        super().__init__(f"class {divisor} is not effective")
        self.divisor = divisor


class SplittingConstraintViolated(CoverError, ValueError):
    def __init__(self, total, expected):
        super().__init__(f"L1 + L2 = {total}, but -K_W + H = {expected}")
        self.total = total
        self.expected = expected


class NonEffectiveBranch(CoverError, ValueError):
    def __init__(self, name, divisor):
        super().__init__(f"branch class {name} = {divisor} is not effective")
        self.name = name
        self.divisor = divisor


class HalvingNotIntegral(CoverError, ValueError):
    pass


class CanonicalMorphismViolated(CoverError):
    def __init__(self, summand_count, hyperplane_count):
        super().__init__(
            f"h0(phi^*H) = {summand_count} but h0(H) = {hyperplane_count}; "
            "the cover is not induced by the complete canonical series"
        )
        self.summand_count = summand_count
        self.hyperplane_count = hyperplane_count


class InvalidAlgebraData(CoverError, ValueError):
    pass
