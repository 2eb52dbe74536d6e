"""Classification outcomes with numeric witnesses."""

from dataclasses import dataclass, field
from enum import Enum

from .errors import IndeterminateBand

DEFAULT_TOL = 1e-10
BAND_FACTOR = 10.0


class Outcome(str, Enum):
    TRUE = "true"
    FALSE = "false"
    INDETERMINATE = "indeterminate"


@dataclass(frozen=True)
class Witness:
    n: int
    magnitude: float
    m: int = None

    def to_json(self):
        out = {"n": self.n, "magnitude": self.magnitude}
        if self.m is not None:
            out = {"m": self.m, **out}
        return out


@dataclass(frozen=True)
class Verdict:
    value: Outcome
    witness: Witness = None
    tolerance_used: float = DEFAULT_TOL
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if (self.witness is not None) != (self.value is Outcome.FALSE):
            raise ValueError("a witness accompanies exactly the false verdicts")

    @property
    def holds(self):
        return self.value is Outcome.TRUE

    @property
    def decided(self):
        return self.value is not Outcome.INDETERMINATE

    def require_decided(self):
        if not self.decided:
            raise IndeterminateBand("magnitude inside the indeterminate band", self)
        return self

    @classmethod
    def from_bool(cls, ok, witness=None, tol=DEFAULT_TOL, **details):
        if ok:
            return cls(Outcome.TRUE, None, tol, details)
        return cls(Outcome.FALSE, witness, tol, details)

    def to_json(self):
        out = {"value": self.value.value, "tolerance": self.tolerance_used}
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        out.update(self.details)
        return out


def zero_verdict(items, scale, tol=DEFAULT_TOL, **details):
    """Decide whether every magnitude in ``items`` vanishes relative to ``scale``.

    ``items`` yields ``(index, magnitude)`` with ``index`` an int or an
    ``(m, n)`` pair, in scan order. Magnitudes in ``[tol, 10 tol] * scale``
    make the verdict indeterminate unless something larger is present.
    """
    thresh = tol * max(scale, 1e-300)
    worst = 0.0
    first_bad = None
    for idx, mag in items:
        mag = float(mag)
        worst = max(worst, mag)
        if first_bad is None and mag > BAND_FACTOR * thresh:
            first_bad = (idx, mag)
    details = {"max_magnitude": worst, "scale": scale, **details}
    if first_bad is not None:
        idx, mag = first_bad
        w = Witness(m=idx[0], n=idx[1], magnitude=mag) if isinstance(idx, tuple) else Witness(n=idx, magnitude=mag)
        return Verdict(Outcome.FALSE, w, tol, details)
    if worst < thresh:
        return Verdict(Outcome.TRUE, None, tol, details)
    return Verdict(Outcome.INDETERMINATE, None, tol, details)


@dataclass(frozen=True)
class DualVerdict:
    """A closed-form criterion and a direct numeric check of the same statement."""

    criterion: Verdict
    numeric: Verdict

    @property
    def agree(self):
        if not (self.criterion.decided and self.numeric.decided):
            return None
        return self.criterion.value is self.numeric.value

    @property
    def value(self):
        return self.numeric.value

    def to_json(self):
        return {
            "value": self.numeric.value.value,
            "criterion": self.criterion.to_json(),
            "numeric": self.numeric.to_json(),
            "agree": self.agree,
        }
