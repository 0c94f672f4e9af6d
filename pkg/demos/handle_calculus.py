"""From a handle presentation to the homology of its boundary.

Builds the wedge-of-spheres families whose boundaries only differ in ways
rational homology can count, and shows the semicharacteristic parity that
tells them apart.
"""

from weinkit.handles import boundary_connect_sum, boundary_homology
from weinkit.models import t_star_sphere, wedge_spheres_boundary


def main():
    print("T*S^3 as a single critical handle on a ball:")
    p = t_star_sphere(3)
    print(f"  H_*(W)  = {p.homology().describe()}")
    print(f"  chi(W)  = {p.euler_characteristic()}")
    rep = boundary_homology(p)
    print(f"  dim H^k(boundary; Q) = {rep.graded_q()}   (S^2 x S^3, as it must be)")

    print("\nBoundary connect sums add middle cohomology one summand at a time:")
    q = p
    for i in range(2, 5):
        q = boundary_connect_sum(q, p)
        print(f"  {i} copies: rank H^3 = {q.cohomology().rank(3)}")

    print("\nThickened wedges of 2-spheres, boundaries M_i of dimension 5:")
    for i in range(1, 6):
        _, rep = wedge_spheres_boundary(i)
        parity = rep.semi_characteristic()
        print(f"  i = {i}: dim H_2(M_i) = {rep.dim(3)},  "
              f"semicharacteristic = {parity}  "
              f"({'odd' if parity else 'even'} family)")
    print("\nThe parity alternates with i; no two consecutive boundaries")
    print("can be diffeomorphic even though their Betti numbers climb in step.")


if __name__ == "__main__":
    main()
