import pytest
from hypothesis import given
from hypothesis import strategies as st

from singcycles.constructible import (
    ConstructibleFn,
    LagrangianCycleList,
    check_euler_relation,
    completed_conormal,
    cycle_to_function_value,
    evaluate,
    indicator,
    mu_function,
)
from singcycles.errors import InputError, UnsupportedComponent
from singcycles.idealeng import Ideal
from singcycles.polycore import ring

R2 = ring("x y")
ORIGIN = Ideal(R2, ["x", "y"])
ZERO = Ideal(R2, [])
LINE = Ideal(R2, ["y"])
CIRCLE = Ideal(R2, ["x^2 + y^2 - 1"])


class TestConstructibleFn:
    def test_mu_of_node(self):
        mu = mu_function(R2("x*y"))
        assert mu((0, 0)) == 1 and mu((1, 1)) == 0

    def test_mu_with_two_points(self):
        mu = mu_function(R2("x^3 - 3*x + y^2"))
        assert [mu(p) for p in [(1, 0), (-1, 0), (0, 0)]] == [1, 1, 0]

    def test_indicator(self):
        one = indicator(Ideal(R2, ["x*y"]))
        assert one((1, 0)) == 1 and one((1, 1)) == 0

    def test_default_only(self):
        cf = ConstructibleFn(R2, (), 7)
        assert cf((3, "1/2")) == 7

    def test_priority(self):
        cf = ConstructibleFn(R2, ((ORIGIN, 5), (LINE, 2)), 0)
        assert cf((0, 0)) == 5 and cf((3, 0)) == 2 and cf((0, 3)) == 0

    def test_bad_inputs(self):
        with pytest.raises(InputError):
            ConstructibleFn(R2, ((Ideal(R2, ["1"]), 1),))
        with pytest.raises(InputError):
            evaluate(indicator(LINE), (1, 2, 3))


class TestCycleList:
    def test_merge_and_cancel(self):
        a = LagrangianCycleList(((ORIGIN, 2), (LINE, 1)))
        b = LagrangianCycleList(((ORIGIN, -2),))
        assert (a + b).components == ((LINE, 1),)

    def test_invariants(self):
        with pytest.raises(InputError):
            LagrangianCycleList(((ORIGIN, 0),))
        with pytest.raises(InputError):
            LagrangianCycleList(((ORIGIN, 1), (Ideal(R2, ["y", "x"]), 1)))


class TestFunctionValues:
    def test_zero_section(self):
        # (-1)^m [T*_M M] is 1_M
        cyc = LagrangianCycleList(((ZERO, 1),))
        for p in [(0, 0), (2, -1)]:
            assert cycle_to_function_value(cyc, p) == 1

    def test_point(self):
        cyc = LagrangianCycleList(((ORIGIN, 1),))
        assert cycle_to_function_value(cyc, (0, 0)) == 1
        assert cycle_to_function_value(cyc, (1, 0)) == 0

    def test_smooth_curve_is_euler_obstruction(self):
        # (-1)^1 [T*_W M] <-> Eu_W = 1_W for a smooth curve W
        for W in (LINE, CIRCLE):
            cyc = LagrangianCycleList(((W, -1),))
            on = (0, 0) if W is LINE else (1, 0)
            assert cycle_to_function_value(cyc, on) == 1
            assert cycle_to_function_value(cyc, (0, 5)) == 0

    def test_empty(self):
        assert cycle_to_function_value(LagrangianCycleList(), (0, 0)) == 0

    def test_indicator_of_node_curve_via_points(self):
        # 1_{x-axis} = Eu of the line
        cyc = LagrangianCycleList(((LINE, -1),))
        assert [cycle_to_function_value(cyc, p) for p in [(3, 0), (0, 1)]] == [1, 0]

    @given(st.integers(-3, 3), st.integers(-3, 3), st.sampled_from([(0, 0), (1, 0), (0, 2)]))
    def test_linearity(self, a, b, p):
        parts = [(ORIGIN, a), (LINE, b)]
        cyc = LagrangianCycleList(tuple((I, k) for I, k in parts if k))
        expected = sum(k * cycle_to_function_value(LagrangianCycleList(((I, 1),)), p)
                       for I, k in parts)
        assert cycle_to_function_value(cyc, p) == expected

    def test_singular_component_rejected(self):
        with pytest.raises(UnsupportedComponent):
            completed_conormal(Ideal(R2, ["x*y"]))


class TestEuler:
    @pytest.mark.parametrize("f,point,chi,mu", [
        ("x*y", (0, 0), 0, 1), ("x*y", (1, 1), 1, 0), ("x^3 + y^2", (0, 0), -1, 2),
    ])
    def test_examples(self, f, point, chi, mu):
        rep = check_euler_relation(R2(f), [point])
        assert rep.passed
        assert (rep.points[0].chi, rep.points[0].mu) == (chi, mu)

    def test_surface(self):
        assert check_euler_relation(ring("x y z")("x^2 + y^2 + z^2"), [(0, 0, 0)]).passed

    def test_n2_not_implemented(self):
        from singcycles.singlocal import GermMap
        with pytest.raises(NotImplementedError):
            check_euler_relation(GermMap.from_strings("x y z", ["x", "y"]), [(0, 0, 0)])
