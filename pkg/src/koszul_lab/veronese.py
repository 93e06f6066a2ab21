"""Betti tables and Green-Lazarsfeld index of Segre-Veronese rings.

Everything flows through the identity beta^T_{i,j} = dim H_i(m^c, S)_{jc}:
the presentation ring is never materialized.  Entries outside the finite
window with (j - i - 1) min(c) >= i are zero by the multigraded generator
bound, so each table row is a complete, certified computation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import ceil, comb

from .fields import QQ
from .homology import KoszulComplex
from .rings import RingConfig, component_dim, power_ideal

DEFAULT_COMPONENT_CEILING = 50_000


class InfeasibleError(RuntimeError):
    """A requested component exceeds the configured size ceiling."""

    def __init__(self, message, estimate=None):
        super().__init__(message)
        self.estimate = estimate


@dataclass(frozen=True)
class SegreVeroneseSpec:
    blocks: tuple
    c: tuple
    component_ceiling: int = DEFAULT_COMPONENT_CEILING

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(int(m) for m in self.blocks))
        ring = RingConfig(self.blocks)
        object.__setattr__(self, "c", ring.as_mdeg(self.c))
        if any(ci < 1 for ci in self.c):
            raise ValueError("every c_i must be >= 1")

    @property
    def ring(self):
        return RingConfig(self.blocks)

    @property
    def min_c(self):
        return min(self.c)


@dataclass
class BettiTable:
    entries: dict  # (i, j) -> dim
    certified: dict  # (i, j) -> bool
    i_max: int
    windows: dict = field(default_factory=dict)  # i -> (j_lo, j_cut)

    def entry(self, i, j):
        """Entry with window semantics: beyond the window the value is 0."""
        if (i, j) in self.entries:
            return self.entries[(i, j)]
        if i in self.windows and j >= self.windows[i][1]:
            return 0
        raise KeyError((i, j))

    def t_i(self, i):
        """Largest j with a nonzero entry in row i, or None."""
        js = [j for (ii, j), d in self.entries.items() if ii == i and d > 0]
        return max(js) if js else None

    def to_dict(self):
        return {
            "entries": [
                {"i": i, "j": j, "dim": d, "certified": self.certified[(i, j)]}
                for (i, j), d in sorted(self.entries.items())
            ],
            "cap": self.i_max,
            "windows": {str(i): list(w) for i, w in sorted(self.windows.items())},
        }

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)


def quadric_relation_count(spec: SegreVeroneseSpec) -> int:
    """Independent oracle for beta_{1,2}: quadrics through the embedding."""
    ring = spec.ring
    dim_c = component_dim(ring, spec.c)
    dim_2c = component_dim(ring, tuple(2 * a for a in spec.c))
    return comb(dim_c + 1, 2) - dim_2c


def _window_cut(i: int, min_c: int) -> int:
    """Smallest j with (j - i - 1) min(c) >= i; entries beyond are zero."""
    return i + 1 + ceil(i / min_c)


def _check_feasible(spec, kz, t, alpha):
    # the ideal is equigenerated in degree c, so the component dimension has
    # a closed form: C(r, t) * dim S_{alpha - t c}
    r = kz.ideal.r
    if t < 0 or t > r:
        return
    rest = tuple(a - t * ci for a, ci in zip(alpha, spec.c))
    est = comb(r, t) * component_dim(spec.ring, rest) if min(rest) >= 0 else 0
    if est > spec.component_ceiling:
        raise InfeasibleError(
            f"component K_{t} at degree {alpha} has dimension {est} "
            f"over the ceiling {spec.component_ceiling}",
            estimate=est,
        )


def veronese_betti(spec: SegreVeroneseSpec, i_max: int, field=QQ) -> BettiTable:
    """Graded Betti numbers of the Segre-Veronese ring up to row i_max."""
    if i_max < 1:
        raise ValueError("i_max must be >= 1")
    ring = spec.ring
    ideal = power_ideal(ring, spec.c)
    kz = KoszulComplex(ideal, field)
    entries, certified, windows = {}, {}, {}
    entries[(0, 0)] = 1
    certified[(0, 0)] = True
    windows[0] = (0, 1)
    for i in range(1, i_max + 1):
        cut = _window_cut(i, spec.min_c)
        windows[i] = (i, cut)
        for j in range(i, cut):
            alpha = tuple(j * a for a in spec.c)
            for t in (i - 1, i, i + 1):
                _check_feasible(spec, kz, t, alpha)
            entries[(i, j)] = kz.homology_dim(i, alpha)
            certified[(i, j)] = True
    return BettiTable(entries, certified, i_max, windows)


@dataclass
class IndexResult:
    """Green-Lazarsfeld index: exact with a witness, or a range-exhausted bound."""

    exact: bool
    value: int  # the index when exact, else the verified lower bound i_max
    witness: tuple | None  # violating (i, j) when exact
    table: BettiTable

    def satisfies(self, p: int) -> bool:
        return self.value >= p

    def describe(self) -> str:
        if self.exact:
            return f"index = {self.value} (violation at {self.witness})"
        return f"index >= {self.value} (range exhausted)"


def green_lazarsfeld_index(spec: SegreVeroneseSpec, i_max: int, field=QQ) -> IndexResult:
    """Largest p <= i_max with t_i <= i + 1 for i = 1..p, from certified windows."""
    table = veronese_betti(spec, i_max, field)
    for i in range(1, i_max + 1):
        ti = table.t_i(i)
        if ti is not None and ti > i + 1:
            violating_j = min(
                j
                for (ii, j), d in table.entries.items()
                if ii == i and j > i + 1 and d > 0
            )
            return IndexResult(True, i - 1, (i, violating_j), table)
    return IndexResult(False, i_max, None, table)


def np_check(spec: SegreVeroneseSpec, p: int, field=QQ):
    """(satisfied, witness) for property N_p."""
    if p < 1:
        raise ValueError("p must be >= 1")
    res = green_lazarsfeld_index(spec, p, field)
    return res.satisfies(p), res.witness
