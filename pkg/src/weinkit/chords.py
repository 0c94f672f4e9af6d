"""Reeb chord bookkeeping: degrees from front data, zig-zag stabilization,
and the self-intersection index of the induced regular homotopy.

Fronts are abstracted to (down-cusps, up-cusps, Morse index) triples; that
is exactly what the degree formula consumes, and no more geometry is kept.
All actions are exact rationals.
"""

from dataclasses import dataclass
from fractions import Fraction

from .serialize import (
    SCHEMA_VERSION,
    SchemaError,
    check_schema,
    frac_from_str,
    frac_to_str,
)


def chord_degree(down, up, ind):
    """Degree of a chord from its front: down - up + ind - 1."""
    if down < 0 or up < 0 or ind < 0:
        raise ValueError(
            f"cusp counts and Morse index must be >= 0, got ({down}, {up}, {ind})")
    return down - up + ind - 1


@dataclass(frozen=True)
class ChordRecord:
    """One Reeb chord: integer degree, positive rational action, optional
    front provenance (down-cusps, up-cusps, Morse index of the height
    difference), and whether its class in pi_1 relative the Legendrian
    vanishes (non-null-homotopic chords carry no canonical grading and are
    excluded from word enumeration downstream)."""
    id: str
    degree: int
    action: Fraction
    front: tuple = None
    null_homotopic: bool = True

    def __post_init__(self):
        # hot path: stabilization builds thousands of these, so avoid
        # re-wrapping Fractions and compare through the numerator
        if type(self.action) is not Fraction:
            object.__setattr__(self, "action", Fraction(self.action))
        if self.action.numerator <= 0:
            raise ValueError(f"chord {self.id!r}: action must be positive")
        if self.front is not None:
            try:
                d, u, ind = self.front
            except ValueError:
                raise ValueError(
                    f"chord {self.id!r}: front must be (D, U, ind)") from None
            front = (int(d), int(u), int(ind))
            object.__setattr__(self, "front", front)
            expect = chord_degree(*front)
            if expect != self.degree:
                raise ValueError(
                    f"chord {self.id!r}: degree {self.degree} does not match "
                    f"front value {expect}")

    def shifted(self, amount):
        """Same chord after a degree shift by 2N: down-cusp count absorbs it."""
        front = None
        if self.front is not None:
            d, u, ind = self.front
            front = (d + amount, u, ind)
        return ChordRecord(self.id, self.degree + amount, self.action,
                           front, self.null_homotopic)

    def to_json(self):
        return {
            "id": self.id,
            "degree": self.degree,
            "action": frac_to_str(self.action),
            "front": list(self.front) if self.front is not None else None,
            "null_homotopic": self.null_homotopic,
        }

    @staticmethod
    def from_json(doc):
        try:
            return ChordRecord(
                str(doc["id"]), int(doc["degree"]), frac_from_str(doc["action"]),
                tuple(doc["front"]) if doc.get("front") is not None else None,
                bool(doc.get("null_homotopic", True)))
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaError(f"ChordRecord: {exc}") from None


@dataclass(frozen=True)
class ChordSpectrum:
    """All chords with action below the bound, for a contact boundary of
    half-dimension n.  Finite by genericity; ids must be distinct."""
    n: int
    chords: tuple
    bound: Fraction

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"half-dimension must be >= 1, got {self.n}")
        object.__setattr__(self, "chords", tuple(self.chords))
        if type(self.bound) is not Fraction:
            object.__setattr__(self, "bound", Fraction(self.bound))
        if self.bound.numerator <= 0:
            raise ValueError("action bound must be positive")
        seen = set()
        # cross-multiplied int compare; this validation sees every record
        bn, bd = self.bound.numerator, self.bound.denominator
        for c in self.chords:
            if c.id in seen:
                raise ValueError(f"duplicate chord id {c.id!r}")
            seen.add(c.id)
            if c.action.numerator * bd >= bn * c.action.denominator:
                raise ValueError(
                    f"chord {c.id!r}: action {c.action} >= bound {self.bound}")

    def degrees(self):
        return tuple(c.degree for c in self.chords)

    def min_degree(self):
        return min((c.degree for c in self.chords), default=None)

    def to_json(self):
        return {
            "schema": SCHEMA_VERSION,
            "n": self.n,
            "bound": frac_to_str(self.bound),
            "chords": [c.to_json() for c in self.chords],
        }

    @staticmethod
    def from_json(doc):
        check_schema(doc, "ChordSpectrum")
        try:
            chords = tuple(ChordRecord.from_json(c) for c in doc["chords"])
            return ChordSpectrum(int(doc["n"]), chords, frac_from_str(doc["bound"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaError(f"ChordSpectrum: {exc}") from None


@dataclass(frozen=True)
class MorseData:
    """A closed manifold Q carried as Morse data only: its dimension, Euler
    characteristic, orientability, and critical point indices.  The Morse
    equation sum (-1)^ind = chi is enforced."""
    name: str
    dimension: int
    chi: int
    orientable: bool
    critical_points: tuple

    def __post_init__(self):
        object.__setattr__(self, "critical_points",
                           tuple(int(i) for i in self.critical_points))
        if self.dimension < 0:
            raise ValueError("dimension must be >= 0")
        for i in self.critical_points:
            if not 0 <= i <= self.dimension:
                raise ValueError(
                    f"critical index {i} outside [0, {self.dimension}]")
        alt = sum((-1) ** i for i in self.critical_points)
        if alt != self.chi:
            raise ValueError(
                f"Morse data inconsistent: sum (-1)^ind = {alt} != chi = {self.chi}")

    def to_json(self):
        return {
            "schema": SCHEMA_VERSION,
            "name": self.name,
            "dimension": self.dimension,
            "chi": self.chi,
            "orientable": self.orientable,
            "critical_points": list(self.critical_points),
        }

    @staticmethod
    def from_json(doc):
        check_schema(doc, "MorseData")
        try:
            return MorseData(str(doc["name"]), int(doc["dimension"]),
                             int(doc["chi"]), bool(doc["orientable"]),
                             tuple(doc["critical_points"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaError(f"MorseData: {exc}") from None


def min_positive_N(spectrum: ChordSpectrum):
    """Smallest stabilization count making every degree positive: 0 when
    already positive, else 1 - (minimum degree)."""
    m = spectrum.min_degree()
    if m is None or m >= 1:
        return 0
    return 1 - m


def stabilize(spectrum: ChordSpectrum, N, q_data: MorseData, zigzag_action,
              sites=None) -> ChordSpectrum:
    """Zig-zag stabilization: every existing chord's degree rises by 2N
    (its front gains 2N down-cusps), and each of the `sites` modified
    endpoints picks up 2N new chords per critical point of Q, of degree
    1 + Ind(p) and action strictly below zigzag_action.

    sites defaults to the number of non-positive-degree chords (one
    modification site each).  N = 0 is allowed and is the identity.
    """
    if N < 0:
        raise ValueError(f"N must be >= 0, got {N}")
    if N == 0:
        return spectrum
    eps = Fraction(zigzag_action)
    if eps <= 0:
        raise ValueError("zigzag action scale must be positive")
    if eps >= spectrum.bound:
        raise ValueError(
            f"zigzag action {eps} >= spectrum bound {spectrum.bound}: "
            "new chords would break the bound")
    if sites is None:
        sites = sum(1 for c in spectrum.chords if c.degree <= 0)
    sites = int(sites)
    if sites < 0:
        raise ValueError("sites must be >= 0")

    out = [c.shifted(2 * N) for c in spectrum.chords]
    used = {c.id for c in out}
    q = len(q_data.critical_points)
    total = 2 * N * q * sites
    # actions are eps * t / (total + 1); one normalization per record
    num, den = eps.numerator, eps.denominator * (total + 1)
    t = 0
    for site in range(sites):
        for ind in q_data.critical_points:
            for copy in range(2 * N):
                t += 1
                cid = f"zz{t}"
                while cid in used:
                    cid += "_"
                used.add(cid)
                out.append(ChordRecord(
                    id=cid,
                    degree=1 + ind,
                    action=Fraction(num * t, den),
                    front=(2, 0, ind),
                    null_homotopic=True,
                ))
    return ChordSpectrum(spectrum.n, tuple(out), spectrum.bound)


@dataclass(frozen=True)
class SelfIntersectionIndex:
    """Signed count of double points of the regular homotopy; lives in Z
    for even n with orientable Q, in Z/2 otherwise."""
    value: int
    modulus: str  # "Z" or "Z/2"

    @property
    def vanishes(self):
        return self.value == 0


def self_intersection_index(n, N, q_data: MorseData) -> SelfIntersectionIndex:
    """(-1)^{(n-1)(n-2)/2} * N * chi(Q), reduced mod 2 unless the count is
    honestly integer-valued (n even and Q orientable)."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    sign = (-1) ** (((n - 1) * (n - 2)) // 2)
    raw = sign * N * q_data.chi
    if n % 2 == 0 and q_data.orientable:
        return SelfIntersectionIndex(raw, "Z")
    return SelfIntersectionIndex(raw % 2, "Z/2")


def choose_Q(n) -> MorseData:
    """A closed orientable Q of dimension n-2 with chi = 0 that embeds in
    R^{n-1}: the circle for n = 3, S^1 x S^{n-3} for n >= 4.  No such Q
    exists for n = 2 (zero-manifolds have chi > 0)."""
    if n <= 2:
        raise ValueError(
            f"no chi = 0 choice in dimension {n - 2}: every closed 0-manifold "
            "has positive Euler characteristic" if n == 2
            else f"need n >= 3, got {n}")
    if n == 3:
        return MorseData("S^1", 1, 0, True, (0, 1))
    return MorseData(f"S^1 x S^{n - 3}", n - 2, 0, True,
                     (0, 1, n - 3, n - 2))
