"""
Constructive bijections between reduced 312-avoiding hook configurations
and 3D-Dyck / underlined duck words, plus the tennis-ball map.

Heights (values) drive everything here: in a reduced maximal configuration
every height 1..3k belongs to exactly one of descent bottom, SW endpoint,
NE endpoint, and the word read off by increasing height (X/Y/Z
respectively) is a 3D-Dyck word.
"""
from __future__ import annotations

import bisect
from fractions import Fraction
from functools import lru_cache

from .errors import InvalidInput
from .hooks import HookConfig, check_valid, is_reduced
from .perms import avoids_312, descent_table, normalize
from .words import UnderlinedDuckWord, is_3d_dyck, validate_underlined


def _require_reduced_312(c: HookConfig) -> None:
    report = check_valid(c)
    if not report.valid:
        raise InvalidInput(f"configuration is not valid (condition {report.failed_condition})")
    if not avoids_312(c.perm):
        raise InvalidInput("permutation contains a 312 pattern")
    if not is_reduced(c):
        raise InvalidInput("configuration is not reduced")


def height_classification(c: HookConfig) -> str:
    """Label each height of a reduced maximal configuration.

    Height h gets X when the point at that height is a descent bottom,
    Y when it is a SW endpoint, Z when it is a NE endpoint.
    """
    _require_reduced_312(c)
    if c.n != 3 * c.k:
        raise InvalidInput(f"expected 3k points, got n={c.n} with k={c.k} hooks")
    labels = [""] * c.n
    for _, j in descent_table(c.perm).descents:
        labels[c.value_at(j) - 1] = "X"
    for a, b in c.hooks:
        for pos, letter in ((a, "Y"), (b, "Z")):
            h = c.value_at(pos) - 1
            if labels[h]:
                raise InvalidInput("a point carries two roles; configuration is not maximal")
            labels[h] = letter
    return "".join(labels)


def phi(c: HookConfig) -> str:
    """The 3D-Dyck word of a reduced maximal 312-avoiding configuration."""
    word = height_classification(c)
    if not is_3d_dyck(word):
        raise InvalidInput("configuration does not map to a 3D-Dyck word")
    return word


def phi_inverse(w: str) -> HookConfig:
    """
    The unique reduced maximal configuration mapping to w.

    X heights are the descent-bottom heights, Y/Z heights the SW/NE
    endpoint heights.  Endpoints appear left to right in increasing height
    (they are left-to-right maxima), each SW endpoint immediately followed
    by its descent bottom, whose height is the largest unused X height
    below the top.  Hooks pair Y's with Z's like matched parentheses.
    """
    if not is_3d_dyck(w):
        raise InvalidInput(f"not a 3D-Dyck word: {w!r}")
    unused_x = [h for h, ch in enumerate(w, start=1) if ch == "X"]
    values: list[int] = []
    stack: list[int] = []  # heights of unmatched SW endpoints
    hook_heights: list[tuple[int, int]] = []
    for h, ch in enumerate(w, start=1):
        if ch == "X":
            continue
        values.append(h)
        if ch == "Y":
            stack.append(h)
            idx = bisect.bisect_left(unused_x, h) - 1
            if idx < 0:
                raise InvalidInput("no descent-bottom height available below a top")
            values.append(unused_x.pop(idx))
        else:
            hook_heights.append((stack.pop(), h))
    pos = {v: i for i, v in enumerate(values, start=1)}
    hooks = tuple(sorted((pos[y], pos[z]) for y, z in hook_heights))
    return HookConfig(tuple(values), hooks)


def _roles(vals: list[Fraction], hooks: list[list[int]]):
    sw = {h[0] for h in hooks}
    ne = {h[1] for h in hooks}
    bottoms = {q for q in range(1, len(vals)) if vals[q - 1] > vals[q]}
    return sw, ne, bottoms


def expand(c: HookConfig) -> tuple[HookConfig, frozenset[int]]:
    """
    Grow a reduced configuration to one with 3k points by splitting every
    point that is both a SW endpoint and something else: a new pure SW
    endpoint is inserted one column to the right, one height above the
    previous hook endpoint, and the hook moves onto it.

    Returns the maximal configuration and the set of inserted heights.
    """
    _require_reduced_312(c)
    vals: list[Fraction] = [Fraction(v) for v in c.perm]
    hooks = [[a - 1, b - 1] for a, b in c.hooks]
    inserted: list[int] = []  # indices into vals, updated as we insert

    for _ in range(c.k + 1):
        sw, ne, bottoms = _roles(vals, hooks)
        doubly = sorted(p for p in sw if p in ne or p in bottoms)
        if not doubly:
            break
        p = doubly[0]
        ref = vals[p] if p in ne else vals[p - 1]
        above = [v for v in vals if v > ref]
        newv = (ref + min(above)) / 2 if above else ref + 1
        vals.insert(p + 1, newv)
        inserted = [q + 1 if q > p else q for q in inserted] + [p + 1]
        for h in hooks:
            h[0] = h[0] + 1 if h[0] > p else h[0]
            h[1] = h[1] + 1 if h[1] > p else h[1]
            if h[0] == p:
                h[0] = p + 1
    else:
        raise InvalidInput("expansion did not terminate; input is malformed")

    perm = normalize(vals)
    out = HookConfig(perm, tuple(sorted((a + 1, b + 1) for a, b in hooks)))
    heights = frozenset(perm[q] for q in inserted)
    return out, heights


def contract(cp: HookConfig, inserted: frozenset[int] | set[int]) -> HookConfig:
    """
    Inverse of expand: delete the points at the inserted heights and move
    each orphaned hook's SW end onto the point one column to the left.
    """
    report = check_valid(cp)
    if not report.valid:
        raise InvalidInput(f"configuration is not valid (condition {report.failed_condition})")
    pos_of = {cp.value_at(p): p for p in range(1, cp.n + 1)}
    removed = set()
    for h in inserted:
        if h not in pos_of:
            raise InvalidInput(f"no point at height {h}")
        removed.add(pos_of[h])
    new_sw = {}
    for a, b in cp.hooks:
        if b in removed:
            raise InvalidInput("cannot remove a NE endpoint")
        if a in removed:
            if a - 1 in removed or a == 1:
                raise InvalidInput("removal leaves no valid reattachment")
            new_sw[(a, b)] = a - 1
    keep = [p for p in range(1, cp.n + 1) if p not in removed]
    newpos = {old: i for i, old in enumerate(keep, start=1)}
    perm = normalize([cp.value_at(p) for p in keep])
    hooks = tuple(sorted(
        (newpos[new_sw.get((a, b), a)], newpos[b]) for a, b in cp.hooks
    ))
    return HookConfig(perm, hooks)


def phi_prime(c: HookConfig) -> UnderlinedDuckWord:
    """Underlined duck word of any reduced 312-avoiding configuration:
    phi of the expansion, with the inserted heights underlined."""
    cp, heights = expand(c)
    u = UnderlinedDuckWord(phi(cp), heights)
    if not validate_underlined(u):
        raise InvalidInput("expansion produced an invalid underlined word")
    return u


def phi_prime_inverse(u: UnderlinedDuckWord) -> HookConfig:
    """Two-sided inverse of phi_prime."""
    if not validate_underlined(u):
        raise InvalidInput("not a valid underlined duck word")
    return contract(phi_inverse(u.word), u.underlines)


# --- tennis-ball process ---------------------------------------------------


@lru_cache(maxsize=None)
def tennis_lawns(m: int) -> frozenset[frozenset[int]]:
    """
    All reachable lawn configurations after m rounds of the two-in/one-out
    process with balls labelled 1..2m, by breadth-first simulation over
    room states (the lawn is the complement of the room).
    """
    if m < 0:
        raise InvalidInput("m must be nonnegative")
    rooms: set[frozenset[int]] = {frozenset()}
    for t in range(1, m + 1):
        nxt: set[frozenset[int]] = set()
        for room in rooms:
            pool = room | {2 * t - 1, 2 * t}
            for ball in pool:
                nxt.add(pool - {ball})
        rooms = nxt
    all_balls = frozenset(range(1, 2 * m + 1))
    return frozenset(all_balls - room for room in rooms)


def psi(lawn: frozenset[int] | set[int], m: int) -> str:
    """
    Dyck word of a lawn configuration: a leading U, then one letter per
    ball label (U when the ball is on the lawn, D when it is not), then a
    trailing D.
    """
    lawn = frozenset(lawn)
    if lawn not in tennis_lawns(m):
        raise InvalidInput(f"unreachable lawn configuration for m={m}: {sorted(lawn)}")
    body = "".join("U" if ball in lawn else "D" for ball in range(1, 2 * m + 1))
    return "U" + body + "D"
