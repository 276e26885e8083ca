"""Smoke tests for the python bindings: a few frozen values per operation."""

import bentlab


def test_field_basics():
    f = bentlab.build_field(3, 2)
    assert f.q == 9
    assert f.modulus == [2, 1, 1]  # x^2 + x + 2, little-endian
    assert f.dump_line() == "3 2 1 1 2"
    assert f.trace(1) == 2  # Tr(1) = n * 1
    assert f.discrete_log(f.add(1, 1)) == 4  # 2 = xi^4
    assert f.fiber_profile(4) == {4: 2}


def test_walsh_and_classification():
    f = bentlab.build_field(3, 2)
    table = bentlab.monomial_table(f, 1, 4)
    spectrum = bentlab.walsh_spectrum(f, table)
    assert spectrum[0] == (-3, 0)
    assert all(x * x + y * y - x * y == 9 for (x, y) in spectrum)

    verdict = bentlab.classify(f, table)
    assert verdict["is_bent"]
    assert verdict["is_weakly_regular"]
    assert verdict["routes_agree"]
    assert verdict["nu_lambda_S0"] == 2

    zero = bentlab.classify(f, [0] * 9)
    assert not zero["is_bent"]
    assert zero["dual"] is None


def test_planarity():
    f = bentlab.build_field(3, 2)
    square = [0] + [f.pow(x, 2) for x in range(1, 9)]
    identity = list(range(9))
    assert bentlab.is_planar(f, square)
    assert not bentlab.is_planar(f, identity)


def test_weights_and_carries():
    assert bentlab.weight(5, 3, 2) == 3
    assert bentlab.weight(-1, 3, 2) == 3
    assert bentlab.monomial_degree(5, 3) == 3

    sol = bentlab.awc_solve(3, 2, [1, 1], [5, 7])
    assert sol["s_value"] == 4
    assert sol["carries"] == [1, 1]

    scan = bentlab.wtinequ_scan(1)
    assert scan["min_lhs"] == 2
    assert scan["multisets_equal"]

    assert bentlab.genwi_check(0, 0, 1) == 4


def test_carry_graph():
    result = bentlab.carry_graph_prove()
    assert result["vertices"] == 162
    assert result["max_arc_weight"] == 0
    assert result["all_nonpositive"]


def test_periods():
    assert bentlab.uniform_periods_predict(3, 2) == [-1, -1, 2, -1]
    eta = bentlab.periods(3, 2)
    assert eta[2] == ["2", "0"]
