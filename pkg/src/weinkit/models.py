"""Ready-made presentations, spectra, and certificates.

These are the recurring worked examples: balls, cotangent bundles of
spheres, wedge-of-spheres thickenings and their boundaries, a two-letter
chord alphabet with a small word table, and certificate fixtures for the
surgery pipeline (one valid tower, one with a deliberately injected
degree-0 orbit).
"""

from fractions import Fraction

from .chords import ChordRecord, ChordSpectrum
from .graded import ChainComplex
from .handles import HandlePresentation, handlebody_boundary_homology
from .surgery import ADCCertificate, OrbitRecord, OrbitSpectrum, Stage


def ball(n) -> HandlePresentation:
    """The 2n-ball: a single 0-handle."""
    return HandlePresentation(n, [0])


def t_star_sphere(n) -> HandlePresentation:
    """Cotangent bundle of the n-sphere: 0-handle plus one n-handle; the
    middle self-pairing is 0 for n odd and 2 (the Euler number) for n even."""
    form = [[0]] if n % 2 else [[2]]
    return HandlePresentation(n, [0, n], intersection_form=form)


def middle_rank_family(n, i, euler_pairing=False) -> HandlePresentation:
    """One 0-handle and i n-handles with zero boundary maps, so the middle
    cohomology has rank exactly i.  With euler_pairing the form is 2*I
    (spheres with even self-intersection), otherwise the zero form."""
    form = [[(2 if euler_pairing and r == c else 0) for c in range(i)]
            for r in range(i)]
    return HandlePresentation(n, [0] + [n] * i, intersection_form=form)


def wedge_thickening(i, ambient_dim=7):
    """Thickening of a wedge of i copies of (S^2 v S^3): cells in degrees
    0, 2, 3 with zero differentials.  Returns (chain, boundary report)."""
    if i < 1:
        raise ValueError("need at least one wedge summand")
    chain = ChainComplex({0: 1, 2: i, 3: i})
    return chain, handlebody_boundary_homology(chain, ambient_dim)


def wedge_spheres_boundary(i, ambient_dim=6):
    """Boundary of a thickened wedge of i two-spheres; odd-dimensional, so
    it carries a semicharacteristic.  Returns (chain, boundary report)."""
    if i < 1:
        raise ValueError("need at least one wedge summand")
    chain = ChainComplex({0: 1, 2: i})
    return chain, handlebody_boundary_homology(chain, ambient_dim)


def two_letter_table(n=3) -> ChordSpectrum:
    """The alphabet {a: degree 1 action 1, b: degree 2 action 3/2} whose
    cyclic words below action 4 form a seven-class table."""
    return ChordSpectrum(
        n,
        (ChordRecord("a", 1, Fraction(1)), ChordRecord("b", 2, Fraction(3, 2))),
        Fraction(4))


def mixed_sign_spectrum(n=4) -> ChordSpectrum:
    """A spectrum with degrees down to -2, the stock stabilization input."""
    return ChordSpectrum(
        n,
        (ChordRecord("c1", -2, Fraction(1, 2)),
         ChordRecord("c2", 0, Fraction(1)),
         ChordRecord("c3", 3, Fraction(2))),
        Fraction(3))


def sample_certificate(n=3, stages=3) -> ADCCertificate:
    """Valid tower: bounds 5, 40, 320, ... (factor 8), scales halving, two
    positive-degree contractible orbits per stage."""
    if stages < 1:
        raise ValueError("need at least one stage")
    out = []
    bound = Fraction(5)
    scale = Fraction(1)
    for _ in range(stages):
        orbits = (OrbitRecord(2, bound / 2, "old", True),
                  OrbitRecord(max(n - 1, 1), bound / 3, "old", True))
        out.append(Stage(scale, bound, OrbitSpectrum(n, orbits, bound)))
        bound *= 8
        scale /= 2
    return ADCCertificate(tuple(out))


def degree_zero_orbit_fixture(n=3) -> ADCCertificate:
    """Single-stage certificate with an injected degree-0 contractible
    orbit at record index 1; the convexity check must fail exactly there."""
    orbits = (OrbitRecord(2, Fraction(1, 2), "old", True),
              OrbitRecord(0, Fraction(3, 2), "belt:1", True))
    return ADCCertificate(
        (Stage(Fraction(1), Fraction(2), OrbitSpectrum(n, orbits, Fraction(2))),))


def empty_certificate() -> ADCCertificate:
    return ADCCertificate(())
