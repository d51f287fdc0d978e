"""Distribution polynomials over restricted classes, the crossing-count
tableau, and the closed forms they are checked against.

Everything here is exact: a distribution is the sum of q^stat (or
y^stat1 q^stat2) over an enumerated class, and the closed forms are binomial
expressions assembled in integer arithmetic.  All heavy computations are
memoized; inputs are immutable so the caches are safe to share.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Sequence

from .patterns import ClassSpec, class_spec, class_words
from .perm import STATISTICS, crossing_count
from .polynomials import QPoly, YQPoly, ZSeries, cfrac_expand, rational_expand


@dataclass(frozen=True)
class DistributionReport:
    """A distribution polynomial over a class, with its cardinality attached."""

    spec: ClassSpec
    statistics: tuple[str, ...]
    poly: QPoly | YQPoly
    cardinality: int

    def __post_init__(self):
        ones = (1,) * (2 if isinstance(self.poly, YQPoly) else 1)
        if self.poly.evaluate(*ones) != self.cardinality:
            raise AssertionError("distribution does not sum to the class size")

    def poly_text(self) -> str:
        return self.poly.to_text()

    def to_json(self) -> dict:
        return {
            "class": self.spec.describe(),
            "stats": list(self.statistics),
            "poly": self.poly.to_json(),
            "poly_text": self.poly_text(),
            "cardinality": self.cardinality,
        }

    CSV_HEADER = ("n", "avoid", "constraint", "stats", "poly", "cardinality")

    def to_csv_row(self) -> tuple[str, ...]:
        d = self.spec.describe()
        cons = d["constraint"]
        return (
            str(self.spec.n),
            ";".join(d["avoid"]),
            "" if cons is None else f"{cons['kind']}={cons['k']}",
            ";".join(self.statistics),
            self.poly_text(),
            str(self.cardinality),
        )


def _check_stat(stat: str) -> None:
    if stat not in STATISTICS:
        raise ValueError(f"unknown statistic {stat!r}; expected one of {sorted(STATISTICS)}")


@lru_cache(maxsize=None)
def dist_poly(spec: ClassSpec, stat: str, bound: int | None = None) -> tuple[QPoly, int]:
    """(distribution polynomial, class size) of one statistic over a class."""
    _check_stat(stat)
    fn = STATISTICS[stat]
    counts: dict[int, int] = {}
    size = 0
    for w in class_words(spec, bound):
        v = fn(w)
        counts[v] = counts.get(v, 0) + 1
        size += 1
    top = max(counts) + 1 if counts else 0
    poly = QPoly(tuple(counts.get(e, 0) for e in range(top)))
    return poly, size


@lru_cache(maxsize=None)
def joint_poly(
    spec: ClassSpec, stat_y: str, stat_q: str, bound: int | None = None
) -> tuple[YQPoly, int]:
    """(joint distribution y^stat_y q^stat_q, class size) over a class."""
    _check_stat(stat_y)
    _check_stat(stat_q)
    fy, fq = STATISTICS[stat_y], STATISTICS[stat_q]
    counts: dict[tuple[int, int], int] = {}
    size = 0
    for w in class_words(spec, bound):
        key = (fy(w), fq(w))
        counts[key] = counts.get(key, 0) + 1
        size += 1
    poly = YQPoly(tuple((ey, eq, c) for (ey, eq), c in counts.items()))
    return poly, size


def dist(spec: ClassSpec, stat: str, bound: int | None = None) -> DistributionReport:
    poly, size = dist_poly(spec, stat, bound)
    return DistributionReport(spec, (stat,), poly, size)


def joint_dist(
    spec: ClassSpec, stats: tuple[str, str], bound: int | None = None
) -> DistributionReport:
    stat_y, stat_q = stats
    poly, size = joint_poly(spec, stat_y, stat_q, bound)
    return DistributionReport(spec, (stat_y, stat_q), poly, size)


@dataclass(frozen=True)
class CrsProfile:
    """Crossing distributions of one class, bucketed two ways in a single sweep:
    by the position of the letter 1 and by the last letter."""

    n: int
    by_pos1: tuple[QPoly, ...]  # index p-1: members with 1 at position p
    by_last: tuple[QPoly, ...]  # index v-1: members ending with the letter v
    total: QPoly


@lru_cache(maxsize=None)
def crs_profile(n: int, forbidden: tuple = (), bound: int | None = None) -> CrsProfile:
    if n == 0:
        return CrsProfile(0, (), (), QPoly.one())
    pos_counts: list[dict[int, int]] = [dict() for _ in range(n)]
    last_counts: list[dict[int, int]] = [dict() for _ in range(n)]
    for w in class_words(ClassSpec(n, forbidden), bound):
        c = crossing_count(w)
        d = pos_counts[w.index(1)]
        d[c] = d.get(c, 0) + 1
        d = last_counts[w[-1] - 1]
        d[c] = d.get(c, 0) + 1
    def pack(d: dict[int, int]) -> QPoly:
        top = max(d) + 1 if d else 0
        return QPoly(tuple(d.get(e, 0) for e in range(top)))
    by_pos1 = tuple(pack(d) for d in pos_counts)
    by_last = tuple(pack(d) for d in last_counts)
    total = QPoly.zero()
    for p in by_pos1:
        total = total + p
    return CrsProfile(n, by_pos1, by_last, total)


# ---------------------------------------------------------------------------
# the crossing-count tableau


@lru_cache(maxsize=None)
def tableau_value(n: int, k: int) -> QPoly:
    """Cell (n, k) of the triangular array defined by

        R[n][n] = R[n][n-1] = 1,
        R[n][k] = q^min(k-1, n-1-k) * R[n-1][k] + R[n][k+1]   (0 < k < n-1),
        R[n][0] = R[n-1][0] + R[n][1],

    which specializes to R[n][k](1) = 2^(n-1-k) for k < n.
    """
    if not 0 <= k <= n:
        raise ValueError(f"tableau cell ({n}, {k}) out of range")
    if k >= n - 1:
        return QPoly.one()
    if k > 0:
        step = QPoly.monomial(min(k - 1, n - 1 - k)) * tableau_value(n - 1, k)
        return step + tableau_value(n, k + 1)
    return tableau_value(n - 1, 0) + tableau_value(n, 1)


@dataclass(frozen=True)
class QTableau:
    n_max: int
    rows: tuple[tuple[QPoly, ...], ...]

    def value(self, n: int, k: int) -> QPoly:
        if not 0 <= n <= self.n_max or not 0 <= k <= n:
            raise ValueError(f"tableau cell ({n}, {k}) out of range")
        return self.rows[n][k]


def qtableau_build(n_max: int) -> QTableau:
    if n_max < 0:
        raise ValueError("tableau size must be nonnegative")
    rows = tuple(
        tuple(tableau_value(n, k) for k in range(n + 1)) for n in range(n_max + 1)
    )
    return QTableau(n_max, rows)


# ---------------------------------------------------------------------------
# closed forms


def closed_form(form: str, n: int, k: int | None = None) -> QPoly:
    """Closed-form distribution polynomials, with coefficient access via k.

    thm31   ((1+q)^(n-1) - 1 + q)/q          crs over the (123,132)/(123,213) classes
    main1   (1+q)^(n-2)                      crs over those classes with 1 second-to-last
    cor32   sum (delta(k,0) + C(n-1, k+1)) q^k   coefficient form of thm31
    cor34   sum C(n-2, k) q^k                coefficient form of main1
    dokos   (1+q)^(n-1)                      inv over the (321,231) class
    cor53   sum C(n, 2k) y^k                 des/exc over the (231,321) class
            ("cor52" is accepted as an alias)
    """
    one_plus_q = QPoly((1, 1))
    if form == "thm31":
        if n < 1:
            raise ValueError("thm31 requires n >= 1")
        poly = (one_plus_q ** (n - 1) - QPoly.one() + QPoly.var()).div_exact(QPoly.var())
    elif form == "main1":
        if n < 2:
            raise ValueError("main1 requires n >= 2")
        poly = one_plus_q ** (n - 2)
    elif form == "cor32":
        if n < 1:
            raise ValueError("cor32 requires n >= 1")
        coeffs = [(1 if e == 0 else 0) + comb(n - 1, e + 1) for e in range(max(n - 1, 1))]
        poly = QPoly(tuple(coeffs))
    elif form == "cor34":
        if n < 2:
            raise ValueError("cor34 requires n >= 2")
        poly = QPoly(tuple(comb(n - 2, e) for e in range(n - 1)))
    elif form == "dokos":
        if n < 1:
            raise ValueError("dokos requires n >= 1")
        poly = one_plus_q ** (n - 1)
    elif form in ("cor53", "cor52"):
        if n < 0:
            raise ValueError("cor53 requires n >= 0")
        poly = QPoly(tuple(comb(n, 2 * e) for e in range(n // 2 + 1)))
    else:
        raise ValueError(f"unknown closed form {form!r}")
    if k is not None:
        return QPoly.const(poly.coefficient(k))
    return poly


# ---------------------------------------------------------------------------
# tableau vs. enumerated classes


P213_312 = ((2, 1, 3), (3, 1, 2))
P132_312 = ((1, 3, 2), (3, 1, 2))
P213_231 = ((2, 1, 3), (2, 3, 1))
P132_231 = ((1, 3, 2), (2, 3, 1))


def tableau_vs_class(n: int, k: int, bound: int | None = None):
    """Compare tableau cell (n, k) with the crossing distribution of the
    tail-constrained classes for both pattern pairs, and cell (n+1, 1) with the
    (213,231)/(132,231) classes.  Returns (True, None) or (False, witness)."""
    if k < 0 or k > n:
        raise ValueError(f"k={k} out of range 0..{n}")
    jobs = []
    for pats in (P213_312, P132_312):
        spec = class_spec(n, avoid=pats, tail=k if k >= 1 else None)
        jobs.append((spec, tableau_value(n, k)))
    for pats in (P213_231, P132_231):
        jobs.append((class_spec(n, avoid=pats), tableau_value(n + 1, 1)))
    for spec, expected in jobs:
        actual, _ = dist_poly(spec, "crs", bound)
        if actual != expected:
            witness = {
                "n": n,
                "k": k,
                "class": spec.describe(),
                "expected": expected.to_text(),
                "actual": actual.to_text(),
            }
            return False, witness
    return True, None


# ---------------------------------------------------------------------------
# generating functions under test


def crossing_cfrac_series(order: int) -> ZSeries:
    """The continued fraction with level numerators 1, 1, q, q, q^2, q^2, ...
    whose z^n coefficient is the crossing distribution over the 321-avoiders."""
    levels = [QPoly.monomial((m - 1) // 2) for m in range(1, max(order, 0) + 1)]
    return cfrac_expand(levels, order)


def exc_crs_series(order: int) -> ZSeries:
    """(1 - qz) / (1 - (1+q)z - (y-q)z^2): joint exc/crs over the (231,321) class."""
    y, q, one = YQPoly.y(), YQPoly.q(), YQPoly.one()
    return rational_expand([one, -q], [one, -(one + q), -(y - q)], order)


def des_inv_series(order: int) -> ZSeries:
    """(1 - qz) / (1 - (1+q)z - q(y-1)z^2): joint des/inv over the same class."""
    y, q, one = YQPoly.y(), YQPoly.q(), YQPoly.one()
    return rational_expand([one, -q], [one, -(one + q), -(q * (y - one))], order)


def crossing_gf_by_class(pats: Sequence, order: int, bound: int | None = None) -> ZSeries:
    """Brute-force crossing generating function of an avoidance class."""
    coeffs = [dist_poly(class_spec(n, avoid=pats), "crs", bound)[0] for n in range(order + 1)]
    return ZSeries(QPoly, tuple(coeffs))
