import cmath
import math
from fractions import Fraction

import pytest

import char1


def test_witt_table_spot_values():
    rows = {(n, d): s for n, d, s in char1.witt_table(5, 3)}
    assert len(rows) == 125
    assert rows[(1, 5)] == "4T"
    assert rows[(3, 25)] == "3T^2+2T^3"
    assert rows[(8, 125)] == "0"
    assert rows[(1, 125)] == rows[(124, 125)] == "4T^3"
    assert char1.witt_table_csv(5, 3).startswith("alpha_num,alpha_den,series\n")


def test_additive_search():
    assert [len(char1.search_A(n)) for n in range(1, 9)] == [2, 1, 1, 2, 0, 2, 2, 2]
    assert char1.search_A(15, "constructive") != []
    # F_3 = {0, 1, -1}: index 0 is zero, 1 is one, 2 is the generator -1
    s = char1.search_A(2)
    assert s == [[1, 2, 0]]
    table = char1.addition_table(2, s[0])
    assert table[1 * 3 + 1] == 2  # 1 + 1 = -1
    assert table[1 * 3 + 2] == 0  # 1 + (-1) = 0
    assert table == [table[(i % 3) * 3 + i // 3] for i in range(9)]


def test_exponents_and_counts():
    p1 = [(0, []), (0, []), (1, [])]
    assert char1.alpha_exponents(p1) == [Fraction(-1), Fraction(-1)]
    assert char1.alpha_exponents([(0, [5])]) == [Fraction(-9, 5)]
    assert [char1.count_points(p1, n) for n in (1, 2, 3)] == [3, 4, 5]
    assert abs(char1.canonical_extension([(0, [5])], 6) - 5) < 1e-12
    assert abs(char1.zeta_logderiv(p1, 3) + 5 / 6) < 1e-12
    v = char1.zeta_logderiv(p1, 3, "discrete")
    assert abs(v.imag) < 1e-12 and v.real < 0


def test_special_functions():
    s, a = complex(2, 0.5), math.pi
    r = a * char1.f_entire(s, a) + 1j * (s + 1) * char1.f_entire(s + 1, a) - 1j * cmath.exp(1j * a)
    assert abs(r) < 1e-8
    assert abs(char1.hurwitz_zeta(2, 1) - math.pi**2 / 6) < 1e-12
    with pytest.raises(ValueError):
        char1.f_entire(2, 0.0)


def test_mangoldt():
    prof = char1.mangoldt_profile(10)
    assert prof[7] == (8, 2, 8)
    assert prof[5][1] == 0
    assert abs(char1.mangoldt_dirichlet(2, 100000) - 0.5699609931) < 1e-4


def test_elliptic_11a():
    e = char1.CURVE_11A
    assert char1.eta_coeffs(7)[1:] == [1, -2, -1, 2, 1, 2, -2]
    assert char1.discriminant(e) == -161051
    assert char1.count_points_modp(e, 2) == 5
    assert char1.reduction_type(e, 11) == "split multiplicative"
    rep = char1.dirichlet_identity_check(e, 300)
    assert rep["holds"] and rep["message"] == "identity holds through n=300"
    cat = char1.singularity_catalog(e, (-2, 2, -2, 2))
    assert len(cat) == 7 and cat[-1]["conditional"]
    assert char1.t_coeffs(["0", "-1", "1", "-10", "-20"], 121)[121] == 1


def test_errors_are_typed():
    with pytest.raises(char1.ValidationError):
        char1.discriminant([0, 0, 0, 0, 0])
    with pytest.raises(char1.DomainError):
        char1.count_points_modp(char1.CURVE_11A, 4)
    with pytest.raises(char1.ResourceError):
        char1.idempotent_semifield_count(6)
    assert char1.idempotent_semifield_count(2) == 1
