import pytest

from duckwords.counts import (
    CountTriangle,
    IntPolynomial,
    binomial_transform_row,
    catalan,
    catalan3d,
    duck_k1_oracle,
    duck_triangle,
    f_poly,
    h_poly,
    load_golden_triangle,
    tennis_ball_count,
    tennis_ball_weighted,
    underlined_triangle,
    verify_identities,
)
from duckwords.errors import InvalidInput, ResourceLimit


def test_catalan():
    assert [catalan(k) for k in range(7)] == [1, 1, 2, 5, 14, 42, 132]


def test_catalan3d():
    assert [catalan3d(k) for k in range(5)] == [1, 1, 5, 42, 462]
    assert catalan3d(7) == 1385670


def test_count_triangle_csv_roundtrip():
    tri = duck_triangle(4)
    assert CountTriangle.from_csv(tri.to_csv()) == tri


def test_duck_triangle_known_rows():
    tri = duck_triangle(5)
    assert tri.row(1) == (1,)
    assert tri.row(2) == (2, 3)
    assert tri.row(3) == (5, 23, 14)
    assert tri.row(4) == (14, 131, 233, 84)
    assert tri.row(5) == (42, 664, 2339, 2367, 594)


def test_binomial_transform():
    assert binomial_transform_row((14, 131, 233, 84)) == (462, 849, 485, 84)


def test_underlined_triangle_methods_agree():
    transform = underlined_triangle(3, "transform")
    enumerated = underlined_triangle(3, "enumerate")
    brute = underlined_triangle(3, "brute_vhc")
    assert transform == enumerated == brute
    assert transform.row(3) == (42, 51, 14)


def test_enum_limit_raises():
    with pytest.raises(ResourceLimit):
        duck_triangle(9)


def test_int_polynomial():
    p = IntPolynomial((1, 2, 3))  # 1 + 2x + 3x^2
    assert p(0) == 1 and p(1) == 6 and p(-1) == 2
    assert p.shift(1)(0) == p(1)  # shift composes with translation


def test_f_and_h_polynomials():
    for k in range(1, 5):
        f = f_poly(k)
        h = h_poly(k)
        assert f(0) == catalan3d(k)
        assert f(-1) == catalan(k)
        for x in range(-3, 4):
            assert h(x) == f(x - 1)
        assert all(c > 0 for c in h.coefficients)


def test_tennis_ball_weighted():
    assert tennis_ball_weighted(2) == 23
    assert tennis_ball_weighted(3) == 131
    # closed form: (2n^2+5n+4) C(2n+1,n)/(n+2) - 2^(2n+1) at n=2
    assert (2 * 4 + 10 + 4) * 10 // 4 - 2 ** 5 == 23
    for n in range(1, 7):
        assert tennis_ball_weighted(n, "simulate") == tennis_ball_weighted(n, "closed_form")


def test_tennis_ball_count():
    assert [tennis_ball_count(n) for n in range(6)] == [1, 2, 5, 14, 42, 132]


def test_duck_k1_oracle():
    assert duck_k1_oracle(1) == 0
    assert duck_k1_oracle(2) == 3
    assert duck_k1_oracle(5) == 664
    for k in range(2, 7):
        assert duck_k1_oracle(k) == duck_triangle(k).row(k)[1]
        assert duck_k1_oracle(k) == tennis_ball_weighted(k - 1)


def test_golden_files_load():
    duck = load_golden_triangle("duck")
    red = load_golden_triangle("redvhc")
    assert duck.kmax == red.kmax == 7
    assert duck.row(2) == (2, 3)
    assert red.row(2) == (5, 3)
    assert red.row(k=7)[0] == 1385670


def test_golden_dir_override(tmp_path):
    (tmp_path / "duck_triangle.csv").write_text("1\n2,3\n")
    assert load_golden_triangle("duck", tmp_path).row(2) == (2, 3)
    with pytest.raises(InvalidInput):
        load_golden_triangle("redvhc", tmp_path)


def test_verify_identities_small():
    report = verify_identities(4)
    assert report["all_pass"]
    ids = {entry["id"] for entry in report["identities"]}
    assert {
        "row_sum_3d_catalan", "duck_i0_catalan", "duck_top_hankel",
        "underline_transform", "total_power_sum", "alternating_sum_catalan",
        "f_at_zero_3d_catalan", "duck_k1_tennis_ball", "h_poly_positive",
    } <= ids


def test_identity_values_spot_checks():
    # Hankel-style corner: Duck_{3,2} = C_3 C_5 - C_4^2
    assert duck_triangle(3).row(3)[2] == 5 * 42 - 14 ** 2 == 14
    # alternating sum of underlined row 3 returns the Catalan number
    assert 42 - 51 + 14 == catalan(3)
    # doubling identity on row 4
    assert 14 + 2 * 131 + 4 * 233 + 8 * 84 == sum((462, 849, 485, 84)) == 1880
