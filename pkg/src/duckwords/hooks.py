"""
Hooks, valid hook configurations, the reduced predicate, and exhaustive
enumeration over 312-avoiding permutations.

A hook on pi is a pair (a, b) of positions with a < b and pi[a-1] < pi[b-1].
Geometrically it is the L-shaped polyline running from the plot point
(a, pi_a) straight up to (a, pi_b) and then right to (b, pi_b).  A valid
hook configuration (VHC) places exactly one hook on every descent top such
that no plot point lies above a hook and hooks meet only at shared endpoint
plot points.

JSON form of a configuration: {"perm": [ints], "hooks": [[sw, ne], ...]}.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb
from typing import Iterator

from .errors import InvalidInput, ResourceLimit
from .perms import (
    Permutation,
    avoids_312,
    check_permutation,
    descent_table,
    enumerate_av312,
    normalize,
)

Hook = tuple[int, int]

# Default cap on exhaustive enumeration over Av_n(312).
DEFAULT_BRUTE_BOUND = 10


@dataclass(frozen=True)
class HookConfig:
    perm: Permutation
    hooks: tuple[Hook, ...]

    @property
    def n(self) -> int:
        return len(self.perm)

    @property
    def k(self) -> int:
        return len(self.hooks)

    def endpoint_positions(self) -> set[int]:
        return {a for a, _ in self.hooks} | {b for _, b in self.hooks}

    def sw_positions(self) -> set[int]:
        return {a for a, _ in self.hooks}

    def ne_positions(self) -> set[int]:
        return {b for _, b in self.hooks}

    def value_at(self, pos: int) -> int:
        return self.perm[pos - 1]

    def to_json(self) -> str:
        return json.dumps(
            {"perm": list(self.perm), "hooks": [list(h) for h in self.hooks]},
            separators=(",", ":"),
        )

    @classmethod
    def from_json(cls, text: str) -> "HookConfig":
        try:
            obj = json.loads(text)
            perm = check_permutation(obj["perm"])
            hooks = tuple(sorted((int(a), int(b)) for a, b in obj["hooks"]))
        except (KeyError, TypeError, ValueError, json.JSONDecodeError) as exc:
            raise InvalidInput(f"bad hook configuration: {text!r}") from exc
        return cls(perm, hooks)


def make_config(perm, hooks) -> HookConfig:
    """Build a HookConfig with hooks in canonical (sw-sorted) order."""
    return HookConfig(check_permutation(perm), tuple(sorted(tuple(h) for h in hooks)))


@dataclass(frozen=True)
class ValidityReport:
    valid: bool
    failed_condition: str  # "i", "ii", "iii", or "none"
    witness: tuple | None = None


def _check_hooks_well_formed(c: HookConfig) -> None:
    seen_sw = set()
    for a, b in c.hooks:
        if not (1 <= a < b <= c.n):
            raise InvalidInput(f"hook {a, b} out of range for n={c.n}")
        if c.value_at(a) >= c.value_at(b):
            raise InvalidInput(f"hook {a, b} has SW endpoint above NE endpoint")
        if a in seen_sw:
            raise InvalidInput(f"two hooks share SW position {a}")
        seen_sw.add(a)


# A segment is ((x1, y1), (x2, y2)) with x1 <= x2, y1 <= y2, axis-aligned.


def _segments(c: HookConfig, hook: Hook):
    a, b = hook
    ya, yb = c.value_at(a), c.value_at(b)
    vertical = ((a, ya), (a, yb))
    horizontal = ((a, yb), (b, yb))
    return vertical, horizontal


def _intersect(s1, s2):
    """Intersection of two axis-aligned integer segments.

    Returns None, ("point", (x, y)) or ("overlap",).
    """
    (ax1, ay1), (ax2, ay2) = s1
    (bx1, by1), (bx2, by2) = s2
    v1, v2 = ax1 == ax2, bx1 == bx2
    if v1 and v2:
        if ax1 != bx1:
            return None
        lo, hi = max(ay1, by1), min(ay2, by2)
        if lo > hi:
            return None
        return ("point", (ax1, lo)) if lo == hi else ("overlap",)
    if not v1 and not v2:
        if ay1 != by1:
            return None
        lo, hi = max(ax1, bx1), min(ax2, bx2)
        if lo > hi:
            return None
        return ("point", (lo, ay1)) if lo == hi else ("overlap",)
    if v2:  # make s1 the vertical one
        s1, s2 = s2, s1
        (ax1, ay1), (ax2, ay2) = s1
        (bx1, by1), (bx2, by2) = s2
    if bx1 <= ax1 <= bx2 and ay1 <= by1 <= ay2:
        return ("point", (ax1, by1))
    return None


def _hook_pair_conflict(c: HookConfig, h1: Hook, h2: Hook):
    """Offending intersection of two hooks, or None if they are compatible.

    Allowed intersections are single points that are plot points and
    endpoints of both hooks; anything else (interior crossings, touching a
    corner, collinear overlap) is a condition (iii) failure.
    """
    ends1 = {(p, c.value_at(p)) for p in h1}
    ends2 = {(p, c.value_at(p)) for p in h2}
    shared = ends1 & ends2
    for s1 in _segments(c, h1):
        for s2 in _segments(c, h2):
            hit = _intersect(s1, s2)
            if hit is None:
                continue
            if hit[0] == "overlap":
                return ("overlap", h1, h2)
            if hit[1] not in shared:
                return ("point", hit[1], h1, h2)
    return None


def check_valid(c: HookConfig) -> ValidityReport:
    """Check conditions (i)-(iii) of the valid hook configuration definition."""
    _check_hooks_well_formed(c)
    dt = descent_table(c.perm)
    tops = {i for i, _ in dt.descents}
    sw = c.sw_positions()
    if sw != tops:
        return ValidityReport(False, "i", (tuple(sorted(sw)), tuple(sorted(tops))))
    for a, b in c.hooks:
        yb = c.value_at(b)
        for l in range(a + 1, b):
            if c.value_at(l) > yb:
                return ValidityReport(False, "ii", ((a, b), (l, c.value_at(l))))
    for idx, h1 in enumerate(c.hooks):
        for h2 in c.hooks[idx + 1:]:
            conflict = _hook_pair_conflict(c, h1, h2)
            if conflict is not None:
                return ValidityReport(False, "iii", conflict)
    return ValidityReport(True, "none")


def is_valid(c: HookConfig) -> bool:
    return check_valid(c).valid


def is_reduced(c: HookConfig) -> bool:
    """True iff every plot point is a hook endpoint or a descent bottom."""
    report = check_valid(c)
    if not report.valid:
        raise InvalidInput(f"configuration is not valid (condition {report.failed_condition})")
    keep = c.endpoint_positions() | {j for _, j in descent_table(c.perm).descents}
    return len(keep) == c.n


def _ne_candidates(pi: Permutation, top: int) -> list[int]:
    # j is a legal NE endpoint for the descent top at `top` iff pi_j > pi_top
    # and no interior point exceeds pi_j (condition ii for this hook alone).
    out = []
    interior_max = 0
    for j in range(top + 1, len(pi) + 1):
        vj = pi[j - 1]
        if vj > pi[top - 1] and vj > interior_max:
            out.append(j)
        interior_max = max(interior_max, vj)
    return out


def enumerate_vhcs(pi: Permutation) -> Iterator[HookConfig]:
    """
    All valid hook configurations on pi, ordered lexicographically by the
    vector of NE positions.

    Backtracks over NE choices per descent top; per-hook condition (ii) is
    folded into the candidate lists and condition (iii) is checked pairwise
    as hooks are added.
    """
    dt = descent_table(pi)
    tops = [i for i, _ in dt.descents]
    candidates = [_ne_candidates(pi, t) for t in tops]
    chosen: list[Hook] = []
    base = HookConfig(pi, ())

    def walk(idx: int) -> Iterator[HookConfig]:
        if idx == len(tops):
            yield HookConfig(pi, tuple(chosen))
            return
        for j in candidates[idx]:
            hook = (tops[idx], j)
            if any(_hook_pair_conflict(base, h, hook) for h in chosen):
                continue
            chosen.append(hook)
            yield from walk(idx + 1)
            chosen.pop()

    yield from walk(0)


def reduce_config(c: HookConfig) -> tuple[HookConfig, frozenset[int]]:
    """
    Remove every point that is neither a descent bottom nor a hook endpoint,
    then renormalize values and reindex hooks.

    Returns the reduced configuration and the set of removed positions
    (positions in the input).  312-avoidance is preserved.
    """
    report = check_valid(c)
    if not report.valid:
        raise InvalidInput(f"configuration is not valid (condition {report.failed_condition})")
    keep = sorted(c.endpoint_positions() | {j for _, j in descent_table(c.perm).descents})
    removed = frozenset(range(1, c.n + 1)) - frozenset(keep)
    newpos = {old: i for i, old in enumerate(keep, start=1)}
    perm = normalize([c.value_at(p) for p in keep])
    hooks = tuple(sorted((newpos[a], newpos[b]) for a, b in c.hooks))
    return HookConfig(perm, hooks), removed


def hooks_projection(c: HookConfig) -> str:
    """
    Dyck word of a reduced maximal configuration: scanning positions left to
    right, each SW endpoint contributes U and each NE endpoint contributes D;
    matched U/D pairs are the hooks.
    """
    if c.n != 3 * c.k or not avoids_312(c.perm) or not is_reduced(c):
        raise InvalidInput("expected a reduced 312-avoiding configuration with 3k points")
    sw, ne = c.sw_positions(), c.ne_positions()
    return "".join(
        "U" if p in sw else "D" for p in range(1, c.n + 1) if p in sw or p in ne
    )


def count_vhcs(pi: Permutation) -> int:
    return sum(1 for _ in enumerate_vhcs(pi))


def reduced_vhcs(pi: Permutation) -> Iterator[HookConfig]:
    for c in enumerate_vhcs(pi):
        if is_reduced(c):
            yield c


def enumerate_red_vhcs_av312(n: int, k: int | None = None) -> Iterator[HookConfig]:
    """Reduced VHCs over all of Av_n(312), optionally restricted to k hooks.

    A VHC always has one hook per descent, so permutations with the wrong
    descent count are skipped up front.  A reduced configuration covers all
    n points with at most 2k endpoints and k descent bottoms, so n > 3k is
    also pruned.
    """
    for pi in enumerate_av312(n):
        d = sum(1 for i in range(1, n) if pi[i - 1] > pi[i])
        if k is not None and d != k:
            continue
        if d == 0:
            if n == 0:
                yield HookConfig(pi, ())
            continue
        if n > 3 * d:
            continue
        yield from reduced_vhcs(pi)


def red_vhc_count_brute(k: int, n: int, bound: int = DEFAULT_BRUTE_BOUND) -> int:
    """|RedVHC_k(Av_n(312))| by exhaustive enumeration."""
    if n > bound:
        raise ResourceLimit(f"n={n} exceeds brute-force bound {bound}")
    return sum(1 for _ in enumerate_red_vhcs_av312(n, k))


def red_vhc_total_brute(n: int, bound: int = DEFAULT_BRUTE_BOUND) -> int:
    """|RedVHC(Av_n(312))| (all hook counts) by exhaustive enumeration."""
    if n > bound:
        raise ResourceLimit(f"n={n} exceeds brute-force bound {bound}")
    return sum(1 for _ in enumerate_red_vhcs_av312(n))


def verify_eq1(n: int, bound: int = DEFAULT_BRUTE_BOUND) -> dict:
    """
    Check the reduction counting identity at size n:

        sum over pi in Av_n(312) of #VHC(pi)
            = sum over r of |RedVHC(Av_r(312))| * C(n, r)

    Both sides are computed exhaustively.  Returns a report dict with the
    two totals and the per-r reduced counts.
    """
    if n > bound:
        raise ResourceLimit(f"n={n} exceeds brute-force bound {bound}")
    lhs = sum(count_vhcs(pi) for pi in enumerate_av312(n))
    reduced_counts = [red_vhc_total_brute(r, bound) for r in range(n + 1)]
    rhs = sum(reduced_counts[r] * comb(n, r) for r in range(n + 1))
    return {
        "n": n,
        "lhs": lhs,
        "rhs": rhs,
        "equal": lhs == rhs,
        "reduced_counts": reduced_counts,
    }
