import random
from fractions import Fraction

from stdlattice import (
    LatticeBasis,
    NormKind,
    brute_cvp,
    equality_case_analyze,
    measure,
    member,
    nearest_plane,
)
from util import identity_basis, random_basis, random_rational_vector


def scaled_identity(n, k):
    return LatticeBasis([[k if i == j else 0 for j in range(n)] for i in range(n)])


class TestNearestPlane:
    def test_equality_configuration(self):
        res = nearest_plane(scaled_identity(4, 2), [1, 1, 1, 1])
        assert res.dist_sq == 4
        assert res.bound_sq == 4
        assert res.at_equality

    def test_lattice_point_maps_to_itself(self):
        rng = random.Random(31)
        for _ in range(20):
            b = random_basis(rng, rng.randint(1, 4), -4, 4)
            coeffs = [rng.randint(-3, 3) for _ in range(b.dim)]
            v = tuple(
                sum(coeffs[i] * b.rows[i][j] for i in range(b.dim)) for j in range(b.dim)
            )
            res = nearest_plane(b, v)
            assert res.dist_sq == 0
            assert res.point == v
            assert res.coeffs == tuple(coeffs)

    def test_ties_round_to_even(self):
        res = nearest_plane(identity_basis(1), [Fraction(1, 2)])
        assert res.coeffs == (0,)
        res = nearest_plane(identity_basis(1), [Fraction(3, 2)])
        assert res.coeffs == (2,)

    def test_bound_holds_and_dominates_exact_distance(self):
        rng = random.Random(37)
        for _ in range(40):
            n = rng.randint(2, 4)
            b = random_basis(rng, n, -3, 3)
            v = random_rational_vector(rng, n)
            res = nearest_plane(b, v)
            max_sq = max(measure(row, NormKind.L2).value for row in b.rows)
            assert res.dist_sq <= Fraction(n, 4) * max_sq
            exact = brute_cvp(b, v)
            assert exact.dist_sq <= res.dist_sq
            assert member(b, res.point) is not None

    def test_translation_equivariance(self):
        rng = random.Random(41)
        for _ in range(20):
            n = rng.randint(1, 4)
            b = random_basis(rng, n, -3, 3)
            v = random_rational_vector(rng, n)
            coeffs = [rng.randint(-3, 3) for _ in range(n)]
            w = tuple(sum(coeffs[i] * b.rows[i][j] for i in range(n)) for j in range(n))
            base = nearest_plane(b, v)
            shifted = nearest_plane(b, [a + c for a, c in zip(v, w)])
            assert shifted.point == tuple(p + c for p, c in zip(base.point, w))
            assert shifted.dist_sq == base.dist_sq

    def test_exact_on_orthogonal_bases(self):
        from util import random_orthogonal_rows_basis

        rng = random.Random(43)
        for _ in range(15):
            n = rng.randint(1, 4)
            b = random_orthogonal_rows_basis(rng, n, max_entry=4)
            v = random_rational_vector(rng, n)
            res = nearest_plane(b, v)
            assert res.dist_sq == brute_cvp(b, v).dist_sq


class TestEqualityCaseAnalyze:
    def test_all_three_conditions(self):
        rep = equality_case_analyze(scaled_identity(4, 2), [1, 1, 1, 1])
        assert rep.orthogonal and rep.equal_norms and rep.half_integer_coefficients
        assert rep.all_hold

    def test_half_integer_fails_on_second_coordinate(self):
        rep = equality_case_analyze(identity_basis(2), [Fraction(1, 2), 0])
        assert rep.orthogonal and rep.equal_norms
        assert not rep.half_integer_coefficients
        assert not rep.all_hold

    def test_non_orthogonal_deep_hole(self):
        b = LatticeBasis([[1, 0], [1, 1]])
        rep = equality_case_analyze(b, [Fraction(1, 2), Fraction(1, 2)])
        assert not rep.orthogonal
        exact = brute_cvp(b, [Fraction(1, 2), Fraction(1, 2)])
        max_sq = max(measure(row, NormKind.L2).value for row in b.rows)
        assert exact.dist_sq < Fraction(2, 4) * max_sq

    def test_characterization_implies_exact_equality(self):
        rng = random.Random(47)
        hit = 0
        for _ in range(60):
            n = rng.randint(1, 4)
            k = rng.randint(1, 3)
            b = scaled_identity(n, k)
            ints = [rng.randint(-2, 2) for _ in range(n)]
            v = [k * (a + Fraction(1, 2)) for a in ints]
            rep = equality_case_analyze(b, v)
            assert rep.all_hold
            hit += 1
            exact = brute_cvp(b, v)
            assert exact.dist_sq == Fraction(n, 4) * k * k
        assert hit == 60

    def test_at_equality_implies_conditions_and_true_distance(self):
        rng = random.Random(53)
        flagged = 0
        for _ in range(300):
            n = rng.randint(1, 4)
            b = random_basis(rng, n, -3, 3)
            den = rng.randint(1, 6)
            v = [Fraction(rng.randint(-12, 12), den) for _ in range(n)]
            res = nearest_plane(b, v)
            if res.at_equality:
                flagged += 1
                rep = equality_case_analyze(b, v)
                assert rep.all_hold
                assert brute_cvp(b, v).dist_sq == res.bound_sq
        # generic instances almost never sit on the knife edge; add one that does
        res = nearest_plane(scaled_identity(3, 2), [1, 1, 1])
        assert res.at_equality
        assert equality_case_analyze(scaled_identity(3, 2), [1, 1, 1]).all_hold
        assert brute_cvp(scaled_identity(3, 2), [1, 1, 1]).dist_sq == res.bound_sq
