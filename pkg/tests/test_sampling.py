from moyalquot.moyal import SymplecticSpace, mat_mul, mat_transpose
from moyalquot.sampling import SampleStream


def test_streams_are_deterministic():
    a = SampleStream("42:case")
    b = SampleStream("42:case")
    for _ in range(10):
        assert a.polynomial(("x", "y"), 3) == b.polynomial(("x", "y"), 3)
        assert a.mobius_det1_matrix() == b.mobius_det1_matrix()
        assert a.permutation(4) == b.permutation(4)


def test_different_labels_differ():
    xs = [SampleStream(f"seed:{k}").polynomial(("x", "y"), 3) for k in range(6)]
    assert len({str(p) for p in xs}) > 1


def test_polynomial_degree_bound():
    s = SampleStream("degree-bound")
    for _ in range(50):
        p = s.polynomial(("x", "y", "z"), 3)
        assert p.total_degree() <= 3


def test_even_polynomials_are_even():
    s = SampleStream("even")
    for _ in range(30):
        p = s.even_polynomial(("x", "y"), 4)
        assert all(sum(exp) % 2 == 0 for exp in p.terms)


def test_mobius_samples_have_det_one():
    s = SampleStream("mobius")
    for _ in range(30):
        (a, b), (c, d) = s.mobius_det1_matrix()
        assert (a * d - b * c).is_one()


def test_symplectic_samples_preserve_form():
    for dim, vs in ((2, ("x", "y")), (4, ("x1", "y1", "x2", "y2"))):
        space = SymplecticSpace.standard(vs)
        s = SampleStream(f"symplectic-{dim}")
        for _ in range(20):
            g = s.symplectic(space)
            assert mat_mul(mat_mul(mat_transpose(g.matrix), space.omega), g.matrix) == space.omega


def test_rational_function_monomial_denominator():
    s = SampleStream("rational-monomial")
    for _ in range(20):
        r = s.rational_function(("x", "y"), 2, 2, monomial_den=True)
        assert len(r.den.terms) == 1
