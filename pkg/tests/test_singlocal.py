import pytest
from hypothesis import given
from hypothesis import strategies as st

from singcycles.errors import ArityMismatch, NonIsolated, NotICIS
from singcycles.idealeng import Ideal, vsdim_quotient
from singcycles.idealeng.ideal import saturation
from singcycles.polycore import ring
from singcycles.singlocal import (
    GermMap,
    check_no_blowup_codim0,
    conormal_by_minors,
    critical_scheme,
    discriminant_ideal,
    jacobian_ideal,
    le_greuel_icis,
    milnor_number_hypersurface,
    relative_conormal_ideal,
)

R2 = ring("x y")

# (polynomial, Milnor number): A1..A4, D4, E6, E8 and the node
CORPUS = [
    ("x^2 + y^2", 1), ("x^3 + y^2", 2), ("x^4 + y^2", 3), ("x^5 + y^2", 4),
    ("x^2*y - y^3", 4), ("x^3 + y^4", 6), ("x^3 + y^5", 8), ("x*y", 1),
]


def germ(vars_, comps, point=None):
    return GermMap.from_strings(vars_, comps, point)


class TestJacobian:
    def test_examples(self):
        assert jacobian_ideal(R2("x^3 + y^2")) == Ideal(R2, ["x^2", "y"])
        assert jacobian_ideal(R2("x*y")) == Ideal(R2, ["x", "y"])
        assert jacobian_ideal(R2("x")).is_unit()

    def test_critical_scheme(self):
        assert critical_scheme(germ("x y", ["x^2", "y^2"])) == Ideal(R2, ["x*y"])
        assert critical_scheme(germ("x y", ["x", "y"])).is_unit()

    @pytest.mark.parametrize("f", [p for p, _ in CORPUS])
    def test_critical_scheme_is_jacobian_for_n1(self, f):
        assert critical_scheme(R2(f)) == jacobian_ideal(R2(f))


class TestGermMap:
    def test_translation(self):
        F = germ("x y", ["x^2 + y"], [1, 2])
        assert F.value == (3,)
        assert F.components[0] == R2("x^2 + 2*x + y")

    def test_arity(self):
        with pytest.raises(ArityMismatch):
            germ("x", ["x", "x^2"])
        with pytest.raises(ArityMismatch):
            germ("x y", ["x"], [0])


class TestMilnor:
    @pytest.mark.parametrize("f,mu", CORPUS)
    def test_corpus(self, f, mu):
        assert milnor_number_hypersurface(R2(f)) == mu

    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_Ak(self, k):
        assert milnor_number_hypersurface(R2(f"x^{k + 1} + y^2")) == k

    def test_smooth_point_is_zero(self):
        assert milnor_number_hypersurface(R2("x*y"), [1, 1]) == 0
        assert milnor_number_hypersurface(R2("x + y^2")) == 0

    def test_non_isolated(self):
        with pytest.raises(NonIsolated):
            milnor_number_hypersurface(R2("x^2"))
        with pytest.raises(NonIsolated):
            milnor_number_hypersurface(R2("0"))

    def test_local_at_one_of_several_points(self):
        # critical points x = +-1 (both A1) and the A1 of the y^2 term
        f = R2("x^3 - 3*x + y^2")
        assert milnor_number_hypersurface(f, [1, 0]) == 1
        assert milnor_number_hypersurface(f, [-1, 0]) == 1
        assert milnor_number_hypersurface(f, [0, 0]) == 0

    @given(st.integers(1, 3), st.integers(1, 3))
    def test_brieskorn_product(self, a, b):
        # mu(x^(a+1) + y^(b+1)) = a * b
        assert milnor_number_hypersurface(R2(f"x^{a + 1} + y^{b + 1}")) == a * b

    def test_localisation_sums_to_global(self):
        f = R2("x^3 - 3*x + y^2")
        J = jacobian_ideal(f)
        at_plus = Ideal(R2, ["x - 1", "y"])
        at_minus = Ideal(R2, ["x + 1", "y"])
        # localise at one point by saturating away the other
        local = [vsdim_quotient(saturation(J, other)[0]) for other in (at_minus, at_plus)]
        assert local == [1, 1]
        assert sum(local) == vsdim_quotient(J)


class TestLeGreuel:
    def test_icis_example(self):
        assert le_greuel_icis(germ("x y z", ["x^2 + y^2 + z^2", "x"])) == 1

    def test_hypersurface_agrees(self):
        for f, mu in CORPUS:
            assert le_greuel_icis(germ("x y", [f])) == mu

    def test_smooth(self):
        assert le_greuel_icis(germ("x y", ["x", "y"])) == 0

    def test_not_icis(self):
        with pytest.raises(NotICIS):
            le_greuel_icis(germ("x y z", ["x*y", "x*z"]))


class TestConormal:
    def test_node(self):
        C = relative_conormal_ideal(R2("x*y"))
        assert C.cotangent == ("a_x", "a_y")
        assert C.ideal == Ideal(C.ring, ["x*a_x - y*a_y"])
        assert C.dimension() == 3

    def test_submersion(self):
        C = relative_conormal_ideal(R2("x"))
        assert C.ideal == Ideal(C.ring, ["a_y"])

    def test_identity_map(self):
        C = relative_conormal_ideal(germ("x y", ["x", "y"]))
        assert C.ideal.is_zero() and C.dimension() == 4

    @pytest.mark.parametrize("comps", [["x^3 + y^2"], ["x^2*y - y^3"], ["x*y"]])
    def test_matches_minor_construction(self, comps):
        F = germ("x y", comps)
        C = relative_conormal_ideal(F)
        assert C.ideal == conormal_by_minors(F).change_ring(C.ring)

    def test_a_homogeneous(self):
        C = relative_conormal_ideal(R2("x^3 + y^4"))
        for g in C.ideal.generators:
            assert len({sum(m[2:]) for m in g.terms}) == 1


class TestNoBlowup:
    @pytest.mark.parametrize("f", [p for p, _ in CORPUS] + ["x"])
    def test_hypersurfaces_pass(self, f):
        rep = check_no_blowup_codim0(R2(f))
        assert rep.passed and rep.conormal_dimension == 3

    def test_icis(self):
        rep = check_no_blowup_codim0(germ("x y z", ["x^2 + y^2 + z^2", "x"]))
        assert rep.passed and rep.fibre_dimensions == (3,) and rep.conormal_dimension == 5

    def test_contact_type_candidate(self):
        assert check_no_blowup_codim0(germ("x y z", ["x^2 + y^2 + z^2", "x*y"])).passed

    def test_sample_fibres(self):
        rep = check_no_blowup_codim0(R2("x*y"), [[1], [-2]])
        assert rep.fibre_dimensions == (2, 2, 2)

    def test_blowup_detected(self):
        # f = (x, x*y): the fibre over 0 of the conormal map jumps in dimension
        rep = check_no_blowup_codim0(germ("x y", ["x", "x*y"]))
        assert not rep.passed


class TestDiscriminant:
    def test_examples(self):
        D = discriminant_ideal(ring("x")("x^2"))
        assert D == Ideal(D.ring, ["w"])
        D = discriminant_ideal(ring("x")("x^3 - 3*x"))
        assert D == Ideal(D.ring, ["w^2 - 4"])
        assert discriminant_ideal(ring("x")("x")).is_unit()
