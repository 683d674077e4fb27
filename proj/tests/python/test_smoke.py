import biggl


def test_combinatorics():
    assert biggl.falling_factorial(5, 2) == "20"
    assert biggl.falling_factorial(4, 3) == "24"
    assert biggl.stirling2(3, 2) == "3"
    assert biggl.sgn_pair([1, 2], [2, 1]) == -1
    assert biggl.sgn_pair([1, 2], [1, 3]) == 0
    assert biggl.epsilon([1, 2], [2, 1], [1], [1]) == -1


def test_generators():
    assert biggl.c_k(2, 1) == "y[1][1] + y[2][2]"
    f11 = biggl.f_pq(2, 1, 1, 1, cartan=True)
    assert f11 == "t[2]*x[1][1]*d[1][1] + t[1]*x[2][1]*d[2][1]"
    assert biggl.f_pq(3, 1, 1, 2) == "0"  # vanishes once q exceeds r
    assert biggl.m_pq(2, 1, 0, 1) == "x[1][1]*d[1][1] + x[2][1]*d[2][1]"


def test_checks():
    assert biggl.check_commute(3, 2, cartan=True)["pass"]
    assert biggl.check_capelli(2)["pass"]
    assert biggl.check_cauchy_binet(3, 2, 2)["pass"]
    assert biggl.check_bethe_bridge(2, 1, 1)["pass"]
    assert biggl.check_yang_baxter(2)["pass"]
    assert biggl.check_relations(3, 3)["pass"]
    assert biggl.check_dhat([1, 2], 2, 2)["pass"]
    assert biggl.upsilon_rank(2, 2)["pass"]


def test_symmetric_power_presentations():
    ring = biggl.present(2, 2, basis="M", algebra="sl")
    assert ring["generators"] == ["c2", "M1"]
    assert ring["relations"] == ["M1^3+4*c2*M1"]
    ring = biggl.present(3, 2, basis="P", algebra="gl")
    assert "P1^3-3*P1*P2-2*c2*P1+2*c1*P2+4*c3" in ring["relations"]


def test_weight_diagram():
    assert biggl.weight_diagram(2, 2) == [[2, 0], [1, 1], [0, 2]]
    assert len(biggl.weight_diagram(3, 2)) == 6


def test_misc_exact_values():
    assert biggl.theta_poly(3, 2) == "-1/2*v[1]^3 + 3/2*v[1]*v[2]"
    assert biggl.lagrange_sum([0, 1], 0) == "0"
    assert biggl.lagrange_sum([0, 1], 1) == "1"
