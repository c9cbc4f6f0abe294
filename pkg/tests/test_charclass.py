import pytest
from hypothesis import given
from hypothesis import strategies as st

from singcycles.charclass import (
    SIGN_TABLE,
    Ambient,
    ChernIntegrand,
    CycleClass,
    SegreClass,
    blowup_fibre_integral,
    blowup_of_jacobian,
    chi_at_point,
    csm_projective_hypersurface,
    cycle_class,
    graph_limit_cycle,
    lagrangian_specialisation,
    mu_at_point,
    mu_total_oracle,
    mu_total_via_Z,
    ohmoto_Z_ideal,
    pushforward_over_one_plus,
    rational_points,
    rees_by_elimination,
    rees_graph_ideal,
    segre_class_fibre,
    segre_class_fibre_by_blowup,
    sign,
    total_transform_ideal,
    total_transform_prime_class,
)
from singcycles.errors import (
    EmptyIdeal,
    MultipleSingularFibres,
    NotHomogeneous,
    PositiveDimensionalCritical,
    UnsupportedComponent,
)
from singcycles.idealeng import Ideal
from singcycles.polycore import ring
from singcycles.singlocal import GermMap, milnor_number_hypersurface

R2 = ring("x y")
R3 = ring("x y z")
QH = ["x^2 + y^2", "x^3 + y^2", "x^4 + y^2", "x^2*y - y^3", "x^3 + y^4", "x*y"]


class TestSigns:
    @pytest.mark.parametrize("m", [1, 2, 3, 4])
    def test_table(self, m):
        assert sign("mu_point", m) == (-1) ** m
        assert sign("cycle_projective", m) == -sign("cycle_completed", m)
        assert sign("euler_relation", m, 1) == (-1) ** m
        assert sign("chi_minus_one", m) == (-1) ** (m - 1)
        assert sign("csm_mu", m) == (-1) ** (m - 1)
        assert sign("euler_obstruction", m) == (-1) ** m

    def test_total_mu_depends_on_n(self):
        assert [sign("total_mu", 3, n) for n in (1, 2, 3)] == [1, -1, 1]
        assert sign("euler_relation", 3, 2) == 1

    def test_relation_between_entries(self):
        # 1 = chi + e*mu and chi - 1 = c*mu force e = -c for n = 1
        for m in range(1, 6):
            assert sign("euler_relation", m) == -sign("chi_minus_one", m)

    def test_every_entry_is_a_sign(self):
        for name in SIGN_TABLE:
            assert sign(name, 2, 1) in (-1, 1)


class TestClasses:
    AMB = Ambient(("x", "y"), ("u0", "u1"))

    def test_arithmetic(self):
        a = CycleClass(self.AMB, 2, (1, 2), "a")
        b = CycleClass(self.AMB, 2, (0, 3), "b")
        assert (a + b).coefficients == (1, 5)
        assert (a - b).coefficients == (1, -1) and not (a - b).is_effective()
        assert CycleClass.zero(self.AMB, 2).is_zero()

    def test_mismatch(self):
        with pytest.raises(ValueError):
            CycleClass(self.AMB, 2, (1, 0)) + CycleClass(self.AMB, 1, (1, 0))

    def test_blowup_of_origin(self):
        I, amb = rees_graph_ideal([R2("x"), R2("y")])
        # [Bl_0 C^2] meets a generic point of C^2 once and a generic line of P^1 once
        assert cycle_class(I, amb).coefficients == (1, 1)

    @given(st.lists(st.integers(-5, 5), min_size=3, max_size=3),
           st.lists(st.integers(-5, 5), min_size=3, max_size=3))
    def test_integration_is_linear(self, s, t):
        c = ChernIntegrand.dual_tautological_quotient(2)
        lhs = SegreClass(tuple(a + b for a, b in zip(s, t)), 2).integrate(c)
        assert lhs == SegreClass(tuple(s), 2).integrate(c) + SegreClass(tuple(t), 2).integrate(c)

    @given(st.integers(0, 4), st.integers(-3, 3), st.integers(-3, 3))
    def test_chern_series_multiplicative(self, N, a, b):
        la, lb = ChernIntegrand.line(a, N), ChernIntegrand.line(b, N)
        prod = (la * lb).coefficients
        expected = [1, a + b, a * b] + [0] * N
        assert list(prod) == expected[:N + 1]

    def test_dual_quotient_inverts_hyperplane(self):
        for N in range(4):
            c = ChernIntegrand.dual_tautological_quotient(N) * ChernIntegrand.line(1, N)
            assert c.coefficients == (1,) + (0,) * N

    def test_constant_term(self):
        with pytest.raises(ValueError):
            ChernIntegrand((2, 1))


class TestRees:
    @pytest.mark.parametrize("gens", [["x", "y"], ["x^2", "x*y"], ["x^2", "y"],
                                      ["x^3", "y^2"], ["y", "x^2", "0"]])
    def test_matches_elimination(self, gens):
        I, amb = rees_graph_ideal([R2(g) for g in gens])
        J, _ = rees_by_elimination([R2(g) for g in gens])
        assert I == J

    def test_blowup_equation(self):
        I, amb = rees_graph_ideal([R2("x"), R2("y")])
        assert I == Ideal(amb.ring(), ["x*u1 - y*u0"])

    def test_principal(self):
        I, _ = rees_graph_ideal([R2("x")])
        assert I.is_zero()

    def test_exceptional_of_x2_xy(self):
        # (x^2, xy) = x(x, y): same blow-up as the origin, class (1, 1)
        I, amb = rees_graph_ideal([R2("x^2"), R2("x*y")])
        assert cycle_class(I, amb).coefficients == (1, 1)

    def test_cone_twist(self):
        C, amb = rees_graph_ideal([R2("x"), R2("y")], cone_twist=True)
        assert C == Ideal(amb.ring(), ["x", "y"])

    def test_empty(self):
        with pytest.raises(EmptyIdeal):
            rees_graph_ideal([R2("0")])


class TestSegre:
    def test_node_blowup(self):
        B, amb = blowup_of_jacobian(R2("x*y"))
        s = segre_class_fibre(B, amb, (0, 0), dimension=2)
        assert s.coefficients == (1, 1)
        assert s.integrate(ChernIntegrand.dual_tautological_quotient(1)) == 0

    def test_node_total_transform(self):
        X, amb = total_transform_ideal(R2("x*y"), (0, 0))
        s = segre_class_fibre(X, amb, (0, 0), dimension=1)
        assert s.coefficients == (2, 2)
        assert s.integrate(ChernIntegrand.dual_tautological_quotient(1)) == 0

    @pytest.mark.parametrize("gens", [["x", "y"], ["x^2", "y"], ["x^3", "y^2"]])
    def test_matches_blowup_oracle(self, gens):
        B, amb = rees_graph_ideal([R2(g) for g in gens])
        assert segre_class_fibre(B, amb, (0, 0)) == segre_class_fibre_by_blowup(B, amb, (0, 0))

    def test_smooth_point(self):
        # over a point away from the centre Bl is a section: s = [pt]
        B, amb = blowup_of_jacobian(R2("x*y"))
        assert segre_class_fibre(B, amb, (1, 2), dimension=2).coefficients == (1, 0)

    def test_oracle_rejects_fibre_components(self):
        X, amb = total_transform_ideal(R2("x*y"), (0, 0))
        with pytest.raises(UnsupportedComponent):
            segre_class_fibre_by_blowup(X, amb, (0, 0), dimension=1)


class TestChiMu:
    @pytest.mark.parametrize("f", QH + ["x^3 + y^5"])
    def test_mu_matches_oracle(self, f):
        assert mu_at_point(R2(f)) == milnor_number_hypersurface(R2(f))

    @pytest.mark.parametrize("f,chi", [("x*y", 0), ("x^2 + y^2", 0), ("x^3 + y^2", -1),
                                       ("x^2*y - y^3", -3), ("x^3 + y^4", -5)])
    def test_chi_curves(self, f, chi):
        assert chi_at_point(R2(f)) == chi

    @pytest.mark.parametrize("f,chi", [("x^2 + y^2 + z^2", 2), ("x^3 + y^2 + z^2", 3)])
    def test_chi_surfaces(self, f, chi):
        assert chi_at_point(R3(f)) == chi

    def test_smooth_points(self):
        f = R2("x*y")
        assert chi_at_point(f, (1, 1)) == 1 and mu_at_point(f, (1, 1)) == 0
        g = R2("x^3 + y^2")
        assert chi_at_point(g, (1, 1)) == 1 and mu_at_point(g, (1, 1)) == 0

    def test_germ_base_point(self):
        F = GermMap.from_strings("x y", ["(x - 1)^2 + y^2"], [1, 0])
        assert mu_at_point(F) == 1 and chi_at_point(F) == 0

    def test_literal_blowup_integral_is_diagnostic_only(self):
        assert blowup_fibre_integral(R2("x*y")) == 0
        # differs from chi = -1 for the cusp
        assert blowup_fibre_integral(R2("x^3 + y^2")) != chi_at_point(R2("x^3 + y^2"))


class TestGraph:
    @pytest.mark.parametrize("f", QH)
    def test_conservation(self, f):
        g = graph_limit_cycle(R2(f))
        assert g.conserved()
        assert g.residual.coefficients[:-1] == (0,) * (len(g.residual.coefficients) - 1)

    def test_node_values(self):
        g = graph_limit_cycle(R2("x*y"))
        assert g.dominant.coefficients == (1, 1, 0)
        assert g.residual.coefficients == (0, 0, 1)
        assert g.total.coefficients == (1, 1, 1)

    def test_submersion(self):
        g = graph_limit_cycle(R2("x"))
        assert g.residual.is_zero() and g.dominant.coefficients == g.total.coefficients

    def test_constant(self):
        with pytest.raises(ValueError):
            graph_limit_cycle(R2("3"))

    @pytest.mark.parametrize("f", QH)
    def test_lagrangian_contract(self, f):
        L = lagrangian_specialisation(R2(f))
        assert L.cone_part.coefficients == graph_limit_cycle(R2(f)).residual.coefficients
        assert L.cylinder_part.coefficients == total_transform_prime_class(R2(f)).coefficients

    def test_lagrangian_smooth(self):
        assert lagrangian_specialisation(R2("x")).cone_part.is_zero()

    def test_lagrangian_needs_single_singular_fibre(self):
        with pytest.raises(MultipleSingularFibres):
            lagrangian_specialisation(R2("x^3 - 3*x + y^2"))


class TestCSM:
    @pytest.mark.parametrize("F,chi", [
        ("x^2 + y^2 + z^2", 2), ("y^2*z - x^2*(x + z)", 1), ("y^2*z - x^3", 2),
        ("x*y*z", 3), ("x^3 + y^3 + z^3", 0), ("y^4 - x^3*z", 2),
    ])
    def test_euler_characteristic_and_positivity(self, F, chi):
        res = csm_projective_hypersurface(R3(F))
        assert res.euler_characteristic == chi
        assert res.positivity()

    def test_smooth_conic(self):
        res = csm_projective_hypersurface(R3("x^2 + y^2 + z^2"))
        # c(TX) cap [X] for X = P^1 embedded as a conic: 2[P^1] class 2H, degree-0 part 2
        assert res.csm_1X == (2, 2, 0)
        assert res.csm_mu == (0, 0, 0)

    def test_smooth_cubic_adjunction(self):
        res = csm_projective_hypersurface(R3("x^3 + y^3 + z^3"))
        assert res.csm_1X == (0, 3, 0)

    def test_pushforward_of_point_class(self):
        # a point (e = 0, w = (1,)) pushes forward to [pt] in P^2
        assert pushforward_over_one_plus([1], 2) == [0, 0, 1]

    def test_not_homogeneous(self):
        with pytest.raises(NotHomogeneous):
            csm_projective_hypersurface(R3("x^2 + y"))


class TestTotalMu:
    @pytest.mark.parametrize("f,mu", [("x^2 + y^2", 1), ("x^3 - 3*x + y^2", 2),
                                      ("x^3 + y^3", 4), ("x", 0), ("x^4 - 2*x^2 + y^2", 3),
                                      ("x^3 - 2*x + y^2", 2)])
    def test_matches_oracle(self, f, mu):
        assert mu_total_via_Z(R2(f)) == mu_total_oracle(R2(f)) == mu

    def test_identity(self):
        F = GermMap.from_strings("x y", ["x", "y"])
        assert ohmoto_Z_ideal(F)[0].is_unit()
        assert mu_total_via_Z(F) == 0

    def test_Z_of_node(self):
        Z, amb = ohmoto_Z_ideal(R2("x*y"))
        assert Z == Ideal(amb.ring(), ["x", "y"])

    def test_Z_generators_for_pair(self):
        F = GermMap.from_strings("x y z", ["x^2 + y^2 + z^2", "x*y"])
        Z, amb = ohmoto_Z_ideal(F)
        ring_ = amb.ring()
        for g in ["2*x*u0 + y*u1", "2*y*u0 + x*u1", "z*u0"]:
            assert Z.contains(ring_(g))

    def test_positive_dimensional(self):
        with pytest.raises(PositiveDimensionalCritical):
            mu_total_via_Z(R2("x^2"))

    def test_rational_points(self):
        pts = rational_points(Ideal(R2, ["x^2 - 1", "y"]))
        assert sorted(pts) == [(-1, 0), (1, 0)]
