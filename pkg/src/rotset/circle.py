"""Exact circle points and their base-d symbolic dynamics.

Angles are points of the circle coordinatized by [0, 1) and measured in
revolutions.  They are represented as reduced ``fractions.Fraction`` values,
so ordering, equality and set membership are exact; no floating point enters
any computation here.

The map of interest multiplies an angle by an integer degree d >= 2 and
reduces mod 1 (the angle d-tupling map).  Under it, the itinerary of a
rational angle through the d equal arcs [j/d, (j+1)/d) is exactly its base-d
expansion, which this module converts to and from in both directions.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "CircleAngle",
    "Itinerary",
    "InvalidAngle",
    "InvalidDigit",
    "InvalidItinerary",
    "check_degree",
    "make_angle",
    "as_angle",
    "format_angle",
    "parse_angle",
    "dtupling",
    "preimages",
    "interval_index",
    "itinerary_of",
    "angle_of",
    "parse_itinerary",
]

# An angle is a reduced non-negative Fraction < 1.  All public functions
# canonicalize their angle arguments through as_angle().
CircleAngle = Fraction

_ANGLE_RE = re.compile(r"\A(\d+)/(\d+)\Z")
_ITIN_RE = re.compile(r"\A([0-9,]*)\(([0-9,]+)\)\Z")


class InvalidAngle(ValueError):
    """Raised for angle inputs that cannot denote a point of the circle."""


class InvalidDigit(ValueError):
    """Raised when an itinerary digit is outside 0..d-1."""


class InvalidItinerary(ValueError):
    """Raised for itinerary text that does not parse."""


def check_degree(d: int) -> int:
    """Validate a map degree (an integer >= 2) and return it."""
    if not isinstance(d, int) or isinstance(d, bool) or d < 2:
        raise ValueError(f"degree must be an integer >= 2, got {d!r}")
    return d


def make_angle(numerator: int, denominator: int) -> CircleAngle:
    """Build the reduced representative of numerator/denominator mod 1."""
    if not isinstance(denominator, int) or denominator <= 0:
        raise InvalidAngle(f"denominator must be a positive integer, got {denominator!r}")
    if not isinstance(numerator, int):
        raise InvalidAngle(f"numerator must be an integer, got {numerator!r}")
    return Fraction(numerator, denominator) % 1


def as_angle(value) -> CircleAngle:
    """Coerce a Fraction/int/"num/den" string to a canonical circle angle."""
    if isinstance(value, str):
        return parse_angle(value)
    if isinstance(value, (Fraction, int)):
        return Fraction(value) % 1
    raise InvalidAngle(f"cannot interpret {value!r} as a circle angle")


def format_angle(x: CircleAngle) -> str:
    """Serialize an angle as "num/den" (zero is "0/1")."""
    x = as_angle(x)
    return f"{x.numerator}/{x.denominator}"


def parse_angle(text: str) -> CircleAngle:
    """Parse a "num/den" string produced by format_angle."""
    m = _ANGLE_RE.match(text.strip())
    if m is None:
        raise InvalidAngle(f"expected an angle of the form 'num/den', got {text!r}")
    return make_angle(int(m.group(1)), int(m.group(2)))


def dtupling(x: CircleAngle, d: int) -> CircleAngle:
    """Multiply an angle by d on the circle (one step of the d-tupling map)."""
    check_degree(d)
    return (as_angle(x) * d) % 1


def preimages(x: CircleAngle, d: int) -> tuple[CircleAngle, ...]:
    """The d preimages of x under the d-tupling map, in increasing order."""
    check_degree(d)
    x = as_angle(x)
    n, den = x.numerator, x.denominator
    return tuple(Fraction(n + j * den, d * den) for j in range(d))


def interval_index(x: CircleAngle, d: int) -> int:
    """Index j of the arc [j/d, (j+1)/d) containing x; the first base-d digit."""
    check_degree(d)
    x = as_angle(x)
    return (d * x.numerator) // x.denominator


@dataclass(frozen=True)
class Itinerary:
    """An eventually periodic base-d digit word: preperiod then repeating period.

    Instances are always canonical: the period is primitive (not a repetition
    of a shorter word), an all-(d-1) period is collapsed by carrying, and
    trailing preperiod digits that would roll into the period are absorbed.
    Two itineraries are equal exactly when they denote the same angle.
    """

    degree: int
    preperiod: tuple[int, ...]
    period: tuple[int, ...]

    def __post_init__(self):
        d = check_degree(self.degree)
        pre = tuple(int(t) for t in self.preperiod)
        per = tuple(int(t) for t in self.period)
        if not per:
            raise InvalidItinerary("itinerary period must be nonempty")
        for t in pre + per:
            if t < 0 or t >= d:
                raise InvalidDigit(f"digit {t} out of range for degree {d}")
        pre, per = _canonical_digits(d, pre, per)
        object.__setattr__(self, "preperiod", pre)
        object.__setattr__(self, "period", per)

    def shift(self) -> "Itinerary":
        """Drop the leading digit (one application of the d-tupling map)."""
        if self.preperiod:
            return Itinerary(self.degree, self.preperiod[1:], self.period)
        return Itinerary(self.degree, (), self.period[1:] + self.period[:1])

    def __str__(self) -> str:
        if self.degree <= 10:
            pre = "".join(str(t) for t in self.preperiod)
            per = "".join(str(t) for t in self.period)
        else:
            pre = ",".join(str(t) for t in self.preperiod)
            per = ",".join(str(t) for t in self.period)
        return f"{pre}({per})"


def _primitive_root(word: tuple[int, ...]) -> tuple[int, ...]:
    n = len(word)
    for length in range(1, n + 1):
        if n % length == 0 and word == word[:length] * (n // length):
            return word[:length]
    return word


def _canonical_digits(d, pre, per):
    per = _primitive_root(per)
    if per == (d - 1,) * len(per):
        # 0.x(d-1 repeating) equals the next terminating expansion: carry.
        digits = list(pre)
        i = len(digits) - 1
        while i >= 0:
            digits[i] += 1
            if digits[i] < d:
                break
            digits[i] = 0
            i -= 1
        # A carry past the first digit wraps around the circle and vanishes.
        pre, per = tuple(digits), (0,)
    while pre and pre[-1] == per[-1]:
        pre = pre[:-1]
        per = per[-1:] + per[:-1]
    return pre, per


def itinerary_of(x: CircleAngle, d: int) -> Itinerary:
    """Base-d expansion of a rational angle as (preperiod, repeating period)."""
    check_degree(d)
    x = as_angle(x)
    seen: dict[Fraction, int] = {}
    digits: list[int] = []
    y = x
    while y not in seen:
        seen[y] = len(digits)
        digits.append((d * y.numerator) // y.denominator)
        y = (y * d) % 1
    start = seen[y]
    return Itinerary(d, tuple(digits[:start]), tuple(digits[start:]))


def parse_itinerary(text: str, degree: int) -> Itinerary:
    """Parse itinerary text: optional preperiod digits, then "(period)".

    Degrees up to 10 use one character per digit, e.g. "1(0)" or "(012)";
    larger degrees separate decimal digits with commas, e.g. "(0,11,3)".
    """
    check_degree(degree)
    m = _ITIN_RE.match(text.strip())
    if m is None:
        raise InvalidItinerary(f"cannot parse itinerary {text!r}")
    pre_text, per_text = m.group(1), m.group(2)

    def digits(part: str) -> tuple[int, ...]:
        if not part:
            return ()
        if "," in part:
            tokens = part.split(",")
            if any(not t for t in tokens):
                raise InvalidItinerary(f"empty digit in itinerary {text!r}")
            return tuple(int(t) for t in tokens)
        if degree > 10 and len(part) > 1:
            raise InvalidItinerary(
                f"degree {degree} itineraries need comma-separated digits: {text!r}"
            )
        return tuple(int(c) for c in part)

    return Itinerary(degree, digits(pre_text), digits(per_text))


def angle_of(w: Itinerary | str, d: int) -> CircleAngle:
    """The angle whose base-d expansion is the given itinerary."""
    check_degree(d)
    if isinstance(w, str):
        w = parse_itinerary(w, d)
    if w.degree != d:
        raise InvalidDigit(f"itinerary {w} has degree {w.degree}, expected {d}")
    s, q = len(w.preperiod), len(w.period)
    head = _digits_to_int(w.preperiod, d)
    tail = _digits_to_int(w.period, d)
    base = d**q - 1
    return Fraction(head * base + tail, base * d**s) % 1


def _digits_to_int(digits: tuple[int, ...], d: int) -> int:
    value = 0
    for t in digits:
        value = value * d + t
    return value
