"""Error types shared by every package.

All errors derive from ValueError so callers that only know the generic
contract (bad input -> ValueError) keep working.
"""


class ParameterError(ValueError):
    """A ModelParams / MixupSpec / config value violates its invariants."""


class DomainError(ParameterError):
    """An argument lies outside the domain of a function (e.g. lambda, z)."""


class InsufficientPairsError(ValueError):
    """A class has fewer than two samples, so no same-class pair exists."""

    def __init__(self, label: int, count: int):
        self.label = label
        self.count = count
        super().__init__(
            f"Class {label:+d} has {count} sample(s); same-class mixup needs at least 2"
        )


class SeparationExceededError(ValueError):
    """2 * epsilon >= mu_plus + mu_minus: the adversary can erase the class gap."""

    def __init__(self, epsilon: float, class_distance: float):
        self.epsilon = epsilon
        self.class_distance = class_distance
        super().__init__(
            f"perturbation exceeds class separation: 2*epsilon={2 * epsilon:g} "
            f">= mu_plus+mu_minus={class_distance:g}"
        )


class NoRealRootError(ValueError):
    """The optimal-threshold quadratic has a negative radicand."""


class UndefinedBoundError(ValueError):
    """An ordering bound is undefined (K = 0 makes every disparity vanish)."""


class UnsupportedRegimeError(ValueError):
    """The requested closed form does not exist for this regime (unequal variances, uniform lambda)."""


class DimensionMismatchError(ValueError):
    """Vector length does not match the classifier / model dimension."""


class MissingClassError(ValueError):
    """A class needed for class-wise evaluation has no samples."""

    def __init__(self, label: int):
        self.label = label
        super().__init__(f"Class {label:+d} has no samples; class-wise risk is undefined")


class TrainingDivergedError(RuntimeError):
    """Training loss became non-finite."""

    def __init__(self, epoch: int, loss: float):
        self.epoch = epoch
        self.loss = loss
        super().__init__(f"Training diverged at epoch {epoch}: loss={loss}")


class AttackMismatchError(RuntimeError):
    """An FGSM step disagrees with the closed-form worst-case perturbation."""

    def __init__(self, rows: int, total: int):
        self.rows = rows
        self.total = total
        super().__init__(
            f"FGSM step differs from the closed-form worst case on {rows}/{total} row(s) "
            "(vanishing loss gradient)"
        )


def error_tag(exc: BaseException) -> str:
    """Snake-case tag for an exception class, e.g. SeparationExceededError -> separation_exceeded."""
    name = type(exc).__name__
    if name.endswith("Error"):
        name = name[: -len("Error")]
    chars = []
    for i, ch in enumerate(name):
        if ch.isupper() and i > 0:
            chars.append("_")
        chars.append(ch.lower())
    return "".join(chars)
