"""Chord gradings, zig-zag stabilization, and the word count after surgery.

A chord's degree comes from its front projection; stabilization shifts the
whole spectrum into positive degrees at the price of a cloud of short new
chords; critical surgery turns cyclic words in the alphabet into closed
orbits with a predictable degree shift.
"""

from fractions import Fraction

from weinkit.chords import (
    chord_degree,
    choose_Q,
    min_positive_N,
    self_intersection_index,
    stabilize,
)
from weinkit.models import mixed_sign_spectrum, two_letter_table
from weinkit.surgery import OrbitSpectrum, enumerate_words, orbits_after_surgery


def main():
    print("Front data (down-cusps, up-cusps, Morse index) grades a chord:")
    print(f"  (2, 0, 0)  ->  degree {chord_degree(2, 0, 0)}")
    print(f"  (2, 0, 3)  ->  degree {chord_degree(2, 0, 3)}")

    print("\nA spectrum with degrees -2, 0, 3 needs N =", end=" ")
    s = mixed_sign_spectrum()
    n_shift = min_positive_N(s)
    q = choose_Q(s.n)
    print(f"{n_shift} stabilizations over Q = {q.name}.")
    out = stabilize(s, n_shift, q, Fraction(1, 2))
    olds = {c.id for c in s.chords}
    old_degrees = sorted(c.degree for c in out.chords if c.id in olds)
    new_count = len(out.chords) - len(s.chords)
    print(f"  old degrees after the shift: {old_degrees} (all >= N+1 = "
          f"{n_shift + 1})")
    print(f"  {new_count} zig-zag chords appear, every degree >= 1")
    idx = self_intersection_index(s.n, n_shift, q)
    print(f"  self-intersection index of the homotopy: {idx.value} "
          f"in {idx.modulus} (vanishes, so the move is unobstructed)")

    print("\nCyclic words below the action bound, one class per rotation:")
    table = two_letter_table()
    for w in enumerate_words(table, table.bound):
        print(f"  {w.label():7s} degree {w.degree}  action {w.action}")

    print("\nAfter critical surgery those words become closed orbits")
    print("(degree shifts by n - 3, here n = 3, so not at all):")
    orbs = orbits_after_surgery(OrbitSpectrum(3, (), table.bound),
                                table, table.bound)
    for rec in orbs.orbits[:4]:
        print(f"  {rec.origin:12s} degree {rec.degree}  action {rec.action}")
    print(f"  ... {len(orbs.orbits)} orbits in all")


if __name__ == "__main__":
    main()
