"""Asymptotic convexity certificates through surgery.

A certificate is a tower of rescaled spectra with growing action windows.
The checker hunts for the first violation; the surgery pipeline widens each
window to k*4^k, adjoins the word orbits the handle creates, rescales, and
hands back a certificate that still passes.
"""

from fractions import Fraction

from weinkit.models import degree_zero_orbit_fixture, sample_certificate
from weinkit.surgery import (
    adc_check,
    flexible_surgery_certificate,
    normalize_certificate,
    subcritical_surgery,
    OrbitSpectrum,
)


def main():
    print("A three-stage certificate with bounds 5, 40, 320:")
    cert = sample_certificate(3, 3)
    print(f"  adc_check: {adc_check(cert).outcome}")

    print("\nPlant a degree-0 contractible orbit and the check points at it:")
    bad = adc_check(degree_zero_orbit_fixture())
    print(f"  {bad.outcome}: stage {bad.witness['stage']}, record "
          f"{bad.witness['record']} ({bad.witness['violation']})")

    print("\nNormalization extracts a geometric subsequence (eps = 1/2):")
    norm = normalize_certificate(cert, Fraction(1, 2))
    for st in norm.stages:
        print(f"  scale {str(st.scale):7s} bound {st.bound}")

    print("\nSubcritical surgery only adds belt iterates, degrees "
          "2n - k - 4 + 2j:")
    out = subcritical_surgery(OrbitSpectrum(3, (), Fraction(10)), 3, 1, 4,
                              Fraction(1, 2))
    print("  new degrees:", [r.degree for r in out.orbits],
          "(positive, so convexity survives)")

    print("\nThe critical pipeline re-certifies with unit windows:")
    flex = flexible_surgery_certificate(cert, None, 3)
    print("  output bounds:", [str(st.bound) for st in flex.stages])
    print(f"  adc_check on the output: {adc_check(flex).outcome}")


if __name__ == "__main__":
    main()
