"""Nonattacking fillings of composition diagrams and the integral forms.

Diagrams here may carry a basement: a row 0 holding a permutation of 1..n.
Two cells attack each other when they share a row, or when they sit in
adjacent rows and different columns with the rightmost of the two strictly
higher.  A filling is nonattacking when attacking cells never share an
entry; basement cells take part in the relation.

Triples come in two kinds: an upper cell over its southern neighbour with a
third cell either in the same row further right, in a column that is no
taller (kind A), or one row down further left, in a strictly shorter column
(kind B).  Basement cells may serve as the lower or third cell, never as an
upper cell.  A kind-A triple is a coinversion when its entries run
clockwise, a kind-B triple when they run counterclockwise; bottom-row pairs
of a basement-free diagram count as degenerate coinversions when the right
entry is not the smaller one.  Ties are broken by reading order (rows top
to bottom, the basement last, left to right within a row).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .mpoly import MPoly, t_pochhammer
from .shapes import (Cell, Composition, Permutation, arm, beta_perm,
                     check_composition, check_partition,
                     check_permutation, inc_sort, leg, multiplicities)
from .tableaux import ccw


@dataclass(frozen=True)
class AugmentedFilling:
    """A filling of a composition diagram, with an optional basement row."""

    shape: Composition
    cols: tuple[tuple[int, ...], ...]
    basement: Permutation | None = None

    def __post_init__(self):
        object.__setattr__(self, "shape", check_composition(self.shape))
        object.__setattr__(self, "cols", tuple(tuple(c) for c in self.cols))
        if tuple(len(c) for c in self.cols) != self.shape:
            raise ValueError("column lengths do not match the shape")
        if self.basement is not None:
            b = check_permutation(self.basement)
            if len(b) != len(self.shape):
                raise ValueError("basement length does not match the shape")
            object.__setattr__(self, "basement", b)

    def entry(self, i: int, r: int) -> int:
        if r == 0:
            if self.basement is None:
                raise ValueError("no basement row")
            return self.basement[i - 1]
        return self.cols[i - 1][r - 1]

    def cells(self) -> list[Cell]:
        return [(i, r) for i in range(1, len(self.shape) + 1)
                for r in range(1, self.shape[i - 1] + 1)]

    def x_weight(self, nvars: int) -> MPoly:
        exps = [0] * nvars
        for col in self.cols:
            for e in col:
                if e > nvars:
                    raise ValueError(
                        f"entry {e} exceeds the variable count {nvars}")
                exps[e - 1] += 1
        return MPoly.monomial(nvars, exps)

    def rows(self) -> list[list[int | None]]:
        """Row-major entries, top row first, None outside the diagram."""
        maxh = max(self.shape, default=0)
        out = []
        for r in range(maxh, 0, -1):
            out.append([self.cols[i - 1][r - 1] if self.shape[i - 1] >= r else None
                        for i in range(1, len(self.shape) + 1)])
        return out

    def to_json_dict(self) -> dict:
        return {"shape": list(self.shape),
                "basement": list(self.basement) if self.basement else None,
                "rows": self.rows()}


def attacks(c1: Cell, c2: Cell) -> bool:
    """Whether two distinct cells attack each other (symmetric)."""
    (i1, r1), (i2, r2) = c1, c2
    if i1 == i2:
        return False
    if r1 == r2:
        return True
    if abs(r1 - r2) != 1:
        return False
    hi = c1 if r1 > r2 else c2
    lo = c2 if r1 > r2 else c1
    return hi[0] > lo[0]


def _all_cells_with_basement(f: AugmentedFilling) -> list[Cell]:
    out = f.cells()
    if f.basement is not None:
        out.extend((i, 0) for i in range(1, len(f.shape) + 1))
    return out


def is_nonattacking(f: AugmentedFilling) -> bool:
    cs = _all_cells_with_basement(f)
    for a, b in combinations(cs, 2):
        if attacks(a, b) and f.entry(*a) == f.entry(*b):
            return False
    return True


def is_ordered(f: AugmentedFilling) -> bool:
    """Bottom-row entries under equal-height columns strictly decrease.

    Only defined for weakly increasing shapes.
    """
    shape = f.shape
    if any(a > b for a, b in zip(shape, shape[1:])):
        raise ValueError("ordered is defined for weakly increasing shapes")
    prev = None
    for i in range(1, len(shape) + 1):
        if shape[i - 1] < 1:
            continue
        if prev is not None and shape[prev - 1] == shape[i - 1]:
            if f.entry(i, 1) >= f.entry(prev, 1):
                return False
        prev = i
    return True


def _reading_pos_aug(shape) -> dict[Cell, int]:
    maxh = max(shape, default=0)
    pos, k = {}, 0
    for r in range(maxh, 0, -1):
        for i in range(1, len(shape) + 1):
            if shape[i - 1] >= r:
                pos[(i, r)] = k
                k += 1
    for i in range(1, len(shape) + 1):  # basement read last
        pos[(i, 0)] = k
        k += 1
    return pos


def coinversion_triples(f: AugmentedFilling) -> list[tuple[Cell, ...]]:
    """The coinversion triples, each as (third cell, upper cell, lower cell);
    degenerate ones as (left cell, right cell)."""
    shape = f.shape
    n = len(shape)
    rpos = _reading_pos_aug(shape)
    has_base = f.basement is not None
    out: list[tuple[Cell, ...]] = []
    for u in range(1, n + 1):
        for r in range(1, shape[u - 1] + 1):
            upper, lower = (u, r), (u, r - 1)
            lower_ok = r >= 2 or has_base
            for v in range(u + 1, n + 1):
                if not (r <= shape[v - 1] <= shape[u - 1]):
                    continue
                if lower_ok:
                    tri = (((v, r), f.entry(v, r)), (upper, f.entry(*upper)),
                           (lower, f.entry(*lower)))
                    if not ccw(tri, rpos):  # kind A: clockwise
                        out.append(((v, r), upper, lower))
                elif f.entry(v, 1) >= f.entry(u, 1):  # degenerate pair
                    out.append(((u, 1), (v, 1)))
            for v in range(1, u):
                if shape[v - 1] >= shape[u - 1]:
                    continue
                third_ok = shape[v - 1] >= r - 1 >= 1 or (r == 1 and has_base)
                if lower_ok and third_ok:
                    tri = (((v, r - 1), f.entry(v, r - 1)),
                           (upper, f.entry(*upper)), (lower, f.entry(*lower)))
                    if ccw(tri, rpos):  # kind B: counterclockwise
                        out.append(((v, r - 1), upper, lower))
    return out


def coinv(f: AugmentedFilling) -> int:
    return len(coinversion_triples(f))


def descents_na(f: AugmentedFilling, against_basement: bool = False) -> list[Cell]:
    shape = f.shape
    out = []
    for i in range(1, len(shape) + 1):
        lo = 1 if (against_basement and f.basement is not None) else 2
        for r in range(lo, shape[i - 1] + 1):
            if f.entry(i, r) > f.entry(i, r - 1):
                out.append((i, r))
    return out


def maj_na(f: AugmentedFilling) -> int:
    """Sum of leg+1 over descents; row 1 is never compared to the basement."""
    shape = f.shape
    return sum(leg(shape, s) + 1 for s in descents_na(f))


def _maj_with_basement(f: AugmentedFilling) -> int:
    """As maj_na, but row-1 cells may descend against the basement."""
    shape = f.shape
    return sum(leg(shape, s) + 1 for s in descents_na(f, against_basement=True))


def enumerate_na(shape, basement, n: int, ordered_only: bool = False,
                 no_descents: bool = False):
    """All nonattacking fillings of the diagram with entries 1..n.

    ordered_only restricts the bottom row as in :func:`is_ordered`;
    no_descents keeps only fillings with no descent anywhere, the basement
    included (the surviving set at q = 0).
    """
    shape = check_composition(shape)
    if basement is not None:
        basement = check_permutation(basement)
        if len(basement) != len(shape):
            raise ValueError("basement length does not match the shape")
        if n != len(basement):
            raise ValueError("basement entries must be the letters 1..n")
    if ordered_only and any(a > b for a, b in zip(shape, shape[1:])):
        raise ValueError("ordered enumeration needs a weakly increasing shape")

    ncols = len(shape)
    order = [(i, r) for r in range(1, max(shape, default=0) + 1)
             for i in range(1, ncols + 1) if shape[i - 1] >= r]
    entries: dict[Cell, int] = {}

    def candidates(cell):
        i, r = cell
        for val in range(1, n + 1):
            if no_descents and r >= 2 and val > entries[(i, r - 1)]:
                continue
            if no_descents and r == 1 and basement is not None \
                    and val > basement[i - 1]:
                continue
            if ordered_only and r == 1:
                prev = max((j for j in range(1, i) if shape[j - 1] >= 1),
                           default=None)
                if prev is not None and shape[prev - 1] == shape[i - 1] \
                        and val >= entries[(prev, 1)]:
                    continue
            ok = True
            for (j, s), w in entries.items():
                if w == val and attacks(cell, (j, s)):
                    ok = False
                    break
            if ok and basement is not None:
                for j in range(1, ncols + 1):
                    if basement[j - 1] == val and attacks(cell, (j, 0)):
                        ok = False
                        break
            if ok:
                yield val

    def backtrack(k):
        if k == len(order):
            cols = tuple(tuple(entries[(i, r)] for r in range(1, shape[i - 1] + 1))
                         for i in range(1, ncols + 1))
            yield AugmentedFilling(shape, cols, basement)
            return
        cell = order[k]
        for val in candidates(cell):
            entries[cell] = val
            yield from backtrack(k + 1)
            del entries[cell]

    yield from backtrack(0)


# -- scalar products --------------------------------------------------------

def pr1(mu, nvars: int = 0) -> MPoly:
    """Product over the diagram of mu of (1 - q^leg t^(arm+1))."""
    mu = check_partition(mu)
    out = MPoly.one(nvars)
    one, q, t = MPoly.one(nvars), MPoly.q(nvars), MPoly.t(nvars)
    for i in range(1, len(mu) + 1):
        for r in range(1, mu[i - 1] + 1):
            out = out * (one - q ** leg(mu, (i, r)) * t ** (arm(mu, (i, r)) + 1))
    return out


def pr2(alpha, nvars: int = 0) -> MPoly:
    """(t;t) factors of the part multiplicities, times
    (1 - q^(leg+1) t^(arm+1)) over the non-bottom cells of the sorted diagram."""
    alpha = check_composition(alpha)
    shape = inc_sort(alpha)
    out = MPoly.one(nvars)
    for m in multiplicities(alpha).values():
        out = out * t_pochhammer(m, nvars)
    one, q, t = MPoly.one(nvars), MPoly.q(nvars), MPoly.t(nvars)
    for i in range(1, len(shape) + 1):
        for r in range(2, shape[i - 1] + 1):
            out = out * (one - q ** (leg(shape, (i, r)) + 1)
                         * t ** (arm(shape, (i, r)) + 1))
    return out


def _summand(f: AugmentedFilling, nvars: int) -> MPoly:
    """x^f q^maj t^coinv times the per-cell factors above row 1."""
    shape = f.shape
    one, q, t = MPoly.one(nvars), MPoly.q(nvars), MPoly.t(nvars)
    out = f.x_weight(nvars) * q ** maj_na(f) * t ** coinv(f)
    for i in range(1, len(shape) + 1):
        for r in range(2, shape[i - 1] + 1):
            if f.entry(i, r) == f.entry(i, r - 1):
                out = out * (one - q ** (leg(shape, (i, r)) + 1)
                             * t ** (arm(shape, (i, r)) + 1))
            else:
                out = out * (one - t)
    return out


def e_integral(alpha, n: int | None = None) -> MPoly:
    """Integral form of the permuted-basement polynomial attached to alpha.

    The diagram is the increasing sort of alpha with the maximal sorting
    permutation as basement; the nonattacking condition forces row 1 to copy
    the basement, which makes every filling ordered.
    """
    alpha = check_composition(alpha)
    if n is None:
        n = len(alpha)
    if n != len(alpha):
        raise ValueError("the variable count must equal the number of parts")
    shape = inc_sort(alpha)
    basement = beta_perm(alpha)
    total = MPoly.zero(n)
    for f in enumerate_na(shape, basement, n):
        for i in range(1, n + 1):  # forced bottom row, hence ordered
            if shape[i - 1] >= 1:
                assert f.entry(i, 1) == basement[i - 1]
        assert is_ordered(f)
        total = total + _summand(f, n)
    for m in multiplicities(alpha).values():
        total = total * t_pochhammer(m, n)
    return total


def e_general_q0(alpha, basement, n: int) -> MPoly:
    """Permuted-basement polynomial at q = 0, any shape and basement.

    Only fillings without descents survive at q = 0 (descents are judged
    against the basement as well); each contributes x^f t^coinv times
    (1-t) for every cell differing from its southern neighbour, basement
    included.
    """
    alpha = check_composition(alpha)
    basement = check_permutation(basement)
    if len(alpha) != len(basement) or n != len(basement):
        raise ValueError("shape, basement and variable count must agree")
    one_minus_t = MPoly.one(n) - MPoly.t(n)
    t = MPoly.t(n)
    total = MPoly.zero(n)
    for f in enumerate_na(alpha, basement, n, no_descents=True):
        ndiff = sum(1 for (i, r) in f.cells()
                    if f.entry(i, r) != f.entry(i, r - 1))
        total = total + f.x_weight(n) * t ** coinv(f) * one_minus_t ** ndiff
    return total


def j_compact(mu, n: int) -> MPoly:
    """Integral-form Macdonald polynomial as a sum over ordered
    nonattacking fillings of the increasing diagram."""
    mu = check_partition(mu)
    if n < len(mu):
        raise ValueError("need at least as many variables as parts")
    shape = (0,) * (n - len(mu)) + tuple(sorted(mu))
    total = MPoly.zero(n)
    for f in enumerate_na(shape, None, n, ordered_only=True):
        total = total + _summand(f, n)
    for m in multiplicities(mu).values():
        total = total * t_pochhammer(m, n)
    return total


def j_hhl(mu, n: int) -> MPoly:
    """Integral-form Macdonald polynomial as a sum over all nonattacking
    fillings of the partition diagram itself; the brute-force route."""
    mu = check_partition(mu)
    total = MPoly.zero(n)
    for f in enumerate_na(mu, None, n):
        total = total + _summand(f, n)
    return total * (MPoly.one(n) - MPoly.t(n)) ** len(mu)


def p_poly(mu, n: int) -> "RationalForm":
    """The monic symmetric Macdonald polynomial, as a rational form."""
    from .mpoly import RationalForm
    return RationalForm(j_compact(mu, n), pr1(mu, n))


def schur_oracle(lam, n: int) -> MPoly:
    """Schur polynomial by direct semistandard-tableau enumeration.

    Rows of the Young diagram weakly increase, columns strictly increase,
    entries at most n.
    """
    lam = check_partition(lam)
    terms: dict[tuple[int, ...], int] = {}
    rows = [[0] * r for r in lam]

    def backtrack(idx, flat):
        if idx == len(flat):
            exps = [0] * n
            for row in rows:
                for v in row:
                    exps[v - 1] += 1
            key = tuple(exps) + (0, 0)
            terms[key] = terms.get(key, 0) + 1
            return
        ri, ci = flat[idx]
        lo = 1
        if ci > 0:
            lo = max(lo, rows[ri][ci - 1])
        if ri > 0:
            lo = max(lo, rows[ri - 1][ci] + 1)
        for v in range(lo, n + 1):
            rows[ri][ci] = v
            backtrack(idx + 1, flat)
        rows[ri][ci] = 0

    flat = [(ri, ci) for ri, r in enumerate(lam) for ci in range(r)]
    backtrack(0, flat)
    return MPoly(n, terms)
