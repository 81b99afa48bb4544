"""
Exact integer sequences, count triangles, the generating polynomials, and
the identity verification suite.

Triangle convention: row k (1-based) has entries for i = 0..k-1, where i is
the point deficiency -- entry i of the reduced-configuration triangle counts
reduced configurations with k hooks on 3k-i points, and entry i of the duck
triangle counts 3D-Dyck words of length 3k with exactly i Y's not preceded
by an X.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from importlib import resources
from math import comb, factorial
from pathlib import Path

from .errors import InvalidInput, ResourceLimit
from .hooks import DEFAULT_BRUTE_BOUND, red_vhc_count_brute
from .maps import tennis_lawns
from .words import duck_index, enumerate_3d_dyck, enumerate_dyck, enumerate_underlined

# Enumerations beyond this k are refused unless the caller raises the limit.
DEFAULT_ENUM_LIMIT = 7


def catalan(k: int) -> int:
    if k < 0:
        raise InvalidInput("k must be nonnegative")
    return comb(2 * k, k) // (k + 1)


def catalan3d(k: int) -> int:
    """2 (3k)! / (k! (k+1)! (k+2)!), the number of 3D-Dyck words of length 3k."""
    if k < 0:
        raise InvalidInput("k must be nonnegative")
    num = 2 * factorial(3 * k)
    den = factorial(k) * factorial(k + 1) * factorial(k + 2)
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"3D-Catalan formula not integral at k={k}")
    return q


@dataclass(frozen=True)
class CountTriangle:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for k, row in enumerate(self.rows, start=1):
            if len(row) != k:
                raise InvalidInput(f"row {k} has {len(row)} entries, expected {k}")
            if any(e < 0 for e in row):
                raise InvalidInput(f"row {k} has a negative entry")

    @property
    def kmax(self) -> int:
        return len(self.rows)

    def row(self, k: int) -> tuple[int, ...]:
        return self.rows[k - 1]

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        for row in self.rows:
            writer.writerow(row)
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> "CountTriangle":
        rows = []
        for line in csv.reader(io.StringIO(text)):
            if line:
                rows.append(tuple(int(tok) for tok in line))
        return cls(tuple(rows))


def _check_enum_limit(kmax: int, limit: int) -> None:
    if kmax > limit:
        raise ResourceLimit(f"kmax={kmax} exceeds enumeration limit {limit}")


def duck_triangle(kmax: int, limit: int = DEFAULT_ENUM_LIMIT) -> CountTriangle:
    """Duck counts by (k, i), from classifying every 3D-Dyck word."""
    _check_enum_limit(kmax, limit)
    rows = []
    for k in range(1, kmax + 1):
        row = [0] * k
        for w in enumerate_3d_dyck(k):
            row[duck_index(w)] += 1
        rows.append(tuple(row))
    return CountTriangle(tuple(rows))


def binomial_transform_row(duck_row: tuple[int, ...]) -> tuple[int, ...]:
    """Underlined counts from duck counts: entry i is sum_j C(j, i) duck_j."""
    k = len(duck_row)
    return tuple(
        sum(comb(j, i) * duck_row[j] for j in range(i, k)) for i in range(k)
    )


def underlined_triangle(
    kmax: int,
    method: str = "transform",
    limit: int = DEFAULT_ENUM_LIMIT,
    brute_bound: int = DEFAULT_BRUTE_BOUND,
) -> CountTriangle:
    """
    Counts of (k, i)-underlined duck words, equivalently of reduced
    312-avoiding configurations with k hooks on 3k-i points.

    method:
      "transform"  binomial transform of the duck triangle (fast);
      "enumerate"  direct generation of underlined words;
      "brute_vhc"  exhaustive hook-configuration search (needs 3k-i within
                   the brute-force bound).
    """
    if method == "transform":
        duck = duck_triangle(kmax, limit)
        return CountTriangle(tuple(binomial_transform_row(r) for r in duck.rows))
    if method == "enumerate":
        _check_enum_limit(kmax, limit)
        rows = []
        for k in range(1, kmax + 1):
            rows.append(tuple(
                sum(1 for _ in enumerate_underlined(k, i)) for i in range(k)
            ))
        return CountTriangle(tuple(rows))
    if method == "brute_vhc":
        rows = []
        for k in range(1, kmax + 1):
            if 3 * k - (k - 1) > brute_bound:
                raise ResourceLimit(
                    f"row {k} needs permutations of size {2 * k + 1} > bound {brute_bound}"
                )
            rows.append(tuple(
                red_vhc_count_brute(k, 3 * k - i, brute_bound) for i in range(k)
            ))
        return CountTriangle(tuple(rows))
    raise InvalidInput(f"unknown method: {method!r}")


@dataclass(frozen=True)
class IntPolynomial:
    """Exact-integer polynomial, coefficients in ascending degree."""

    coefficients: tuple[int, ...]

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def shift(self, delta: int) -> "IntPolynomial":
        """The polynomial p(x + delta), exactly."""
        n = len(self.coefficients)
        out = [0] * n
        for i, c in enumerate(self.coefficients):
            for j in range(i + 1):
                out[j] += c * comb(i, j) * delta ** (i - j)
        return IntPolynomial(tuple(out))


def f_poly(k: int, limit: int = DEFAULT_ENUM_LIMIT) -> IntPolynomial:
    """Generating polynomial of reduced-configuration counts by deficiency:
    the x^i coefficient counts reduced configurations on 3k-i points."""
    row = underlined_triangle(k, "transform", limit).row(k)
    return IntPolynomial(row)


def h_poly(k: int, limit: int = DEFAULT_ENUM_LIMIT) -> IntPolynomial:
    """f_k shifted by -1; its coefficients are the duck counts."""
    return f_poly(k, limit).shift(-1)


# --- tennis-ball numbers ---------------------------------------------------

SIMULATE_ROUNDS_LIMIT = 8


def tennis_ball_weighted(n: int, method: str = "closed_form") -> int:
    """
    The n-th weighted tennis-ball number: the sum of all ball labels on the
    lawn over every reachable configuration after n rounds.
    """
    if n < 0:
        raise InvalidInput("n must be nonnegative")
    if method == "simulate":
        if n > SIMULATE_ROUNDS_LIMIT:
            raise ResourceLimit(f"n={n} exceeds simulation limit {SIMULATE_ROUNDS_LIMIT}")
        return sum(sum(lawn) for lawn in tennis_lawns(n))
    if method == "closed_form":
        num = (2 * n * n + 5 * n + 4) * comb(2 * n + 1, n)
        q, r = divmod(num, n + 2)
        if r:
            raise ArithmeticError(f"weighted tennis-ball formula not integral at n={n}")
        return q - 2 ** (2 * n + 1)
    raise InvalidInput(f"unknown method: {method!r}")


def tennis_ball_count(n: int) -> int:
    """Number of reachable lawn configurations after n rounds."""
    if n > SIMULATE_ROUNDS_LIMIT:
        raise ResourceLimit(f"n={n} exceeds simulation limit {SIMULATE_ROUNDS_LIMIT}")
    return len(tennis_lawns(n))


def duck_k1_oracle(k: int, limit: int = 12) -> int:
    """
    Independent count of duck words with exactly one Y not preceded by an X:
    over all Dyck words of length 2k, the number of ways to underline one of
    the U's past the first and circle one of the letters before it, i.e.
    the sum of the letter counts before each of U_2..U_k.
    """
    _check_enum_limit(k, limit)
    total = 0
    for w in enumerate_dyck(k):
        u_positions = [p for p, ch in enumerate(w) if ch == "U"]
        total += sum(u_positions[1:])
    return total


# --- golden data -----------------------------------------------------------


def load_golden_triangle(name: str, directory: str | Path | None = None) -> CountTriangle:
    """Load a shipped golden triangle ("redvhc" or "duck"); an explicit
    directory overrides the packaged data files."""
    filename = f"{name}_triangle.csv"
    if directory is not None:
        path = Path(directory) / filename
        if not path.is_file():
            raise InvalidInput(f"golden triangle not found: {path}")
        text = path.read_text()
    else:
        text = (resources.files("duckwords.data") / filename).read_text()
    return CountTriangle.from_csv(text)


# --- identity suite --------------------------------------------------------


def verify_identities(
    kmax: int,
    limit: int = DEFAULT_ENUM_LIMIT,
    enumerate_cap: int = 5,
    simulate_cap: int = 6,
) -> dict:
    """
    Check the counting identities for every k <= kmax.  Returns a report
    with one machine-readable entry per identity; direct generation of
    underlined words (identity 4) and process simulation (identity 8) are
    capped independently since they grow much faster than the rest.
    """
    duck = duck_triangle(kmax, limit)
    underlined = CountTriangle(tuple(binomial_transform_row(r) for r in duck.rows))
    checks: list[dict] = []

    def add(ident: str, description: str, ok: bool, **details) -> None:
        checks.append({"id": ident, "description": description, "pass": bool(ok), **details})

    rows_ok = all(sum(duck.row(k)) == catalan3d(k) for k in range(1, kmax + 1))
    add("row_sum_3d_catalan", "duck row sums equal the 3D-Catalan numbers", rows_ok,
        values=[sum(duck.row(k)) for k in range(1, kmax + 1)])

    add("duck_i0_catalan", "duck entry i=0 equals the Catalan number",
        all(duck.row(k)[0] == catalan(k) for k in range(1, kmax + 1)),
        values=[duck.row(k)[0] for k in range(1, kmax + 1)])

    add("duck_top_hankel", "duck entry i=k-1 equals C_k C_{k+2} - C_{k+1}^2",
        all(
            duck.row(k)[k - 1] == catalan(k) * catalan(k + 2) - catalan(k + 1) ** 2
            for k in range(1, kmax + 1)
        ),
        values=[duck.row(k)[k - 1] for k in range(1, kmax + 1)])

    gen_max = min(kmax, enumerate_cap)
    direct = underlined_triangle(gen_max, "enumerate", limit)
    add("underline_transform", "binomial transform matches direct generation of underlined words",
        all(direct.row(k) == underlined.row(k) for k in range(1, gen_max + 1)),
        checked_up_to=gen_max)

    add("total_power_sum", "underlined row sums equal sum of 2^j duck entries",
        all(
            sum(underlined.row(k)) == sum(2 ** j * duck.row(k)[j] for j in range(k))
            for k in range(1, kmax + 1)
        ),
        values=[sum(underlined.row(k)) for k in range(1, kmax + 1)])

    add("alternating_sum_catalan", "alternating underlined row sums equal the Catalan numbers",
        all(
            sum((-1) ** i * underlined.row(k)[i] for i in range(k)) == catalan(k)
            and IntPolynomial(underlined.row(k))(-1) == catalan(k)
            for k in range(1, kmax + 1)
        ))

    add("f_at_zero_3d_catalan", "constant term of the deficiency polynomial is the 3D-Catalan number",
        all(IntPolynomial(underlined.row(k))(0) == catalan3d(k) for k in range(1, kmax + 1)))

    tb_ok = True
    tb_values = []
    for k in range(2, kmax + 1):
        expected = duck.row(k)[1]
        closed = tennis_ball_weighted(k - 1, "closed_form")
        oracle = duck_k1_oracle(k)
        ok = closed == expected == oracle
        if k - 1 <= simulate_cap:
            ok = ok and tennis_ball_weighted(k - 1, "simulate") == expected
        tb_values.append({"k": k, "duck": expected, "closed_form": closed, "oracle": oracle})
        tb_ok = tb_ok and ok
    add("duck_k1_tennis_ball", "duck entry i=1 equals the weighted tennis-ball number",
        tb_ok, values=tb_values, simulated_up_to=simulate_cap)

    add("h_poly_positive", "shifted polynomial has strictly positive coefficients",
        all(
            all(c > 0 for c in IntPolynomial(underlined.row(k)).shift(-1).coefficients)
            for k in range(1, kmax + 1)
        ))

    return {
        "kmax": kmax,
        "identities": checks,
        "all_pass": all(c["pass"] for c in checks),
    }
