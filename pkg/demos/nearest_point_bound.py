"""Nearest-plane rounding: the sqrt(n)/2 bound and its knife-edge equality.

For any rational target v and basis rows of squared length at most L, the
rounded point u satisfies ||v - u||^2 <= (n/4) L.  Equality needs everything
at once: mutually orthogonal rows, all of the same length, and a target
sitting at half-integral coefficients (the deep hole of a cubic grid).
Perturb any ingredient and the distance drops strictly below the bound.
"""

from fractions import Fraction

from stdlattice import (
    LatticeBasis,
    brute_cvp,
    equality_case_analyze,
    nearest_plane,
)


def show(basis: LatticeBasis, target, title: str) -> None:
    res = nearest_plane(basis, target)
    rep = equality_case_analyze(basis, target)
    exact = brute_cvp(basis, target)
    print(title)
    print(f"  target {[str(Fraction(t)) for t in target]}")
    print(f"  rounded point {list(res.point)}  dist^2 = {res.dist_sq}  bound^2 = {res.bound_sq}")
    print(f"  exact closest dist^2 = {exact.dist_sq}")
    print(
        f"  equality conditions: orthogonal={rep.orthogonal}, equal_norms={rep.equal_norms}, "
        f"half_integer_coefficients={rep.half_integer_coefficients}"
    )
    print(f"  bound attained: {res.at_equality}")
    print()


def main() -> None:
    cube = LatticeBasis([[2, 0, 0, 0], [0, 2, 0, 0], [0, 0, 2, 0], [0, 0, 0, 2]])
    show(cube, [1, 1, 1, 1], "scaled cubic grid, deep-hole target: the bound is tight")
    show(cube, [1, 1, 1, Fraction(1, 2)], "nudge one coordinate: half-integrality breaks")

    stretched = LatticeBasis([[2, 0, 0, 0], [0, 2, 0, 0], [0, 0, 2, 0], [0, 0, 0, 3]])
    show(stretched, [1, 1, 1, Fraction(3, 2)], "stretch one row: equal norms break")

    sheared = LatticeBasis([[2, 0], [1, 2]])
    show(sheared, [Fraction(3, 2), 1], "sheared 2D basis: orthogonality breaks")


if __name__ == "__main__":
    main()
