"""Monomials, block gradings, monomial ideals and their combinatorial invariants.

Monomials are exponent tuples of length n over a RingConfig with d blocks of
sizes (m_1, ..., m_d); variable order is block-major.  Multidegrees are tuples
of length d (plain ints are accepted for d = 1 and normalized).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from math import comb


@dataclass(frozen=True)
class RingConfig:
    """Polynomial ring K[x_ij] with deg x_ij = e_i in Z^d."""

    blocks: tuple

    def __post_init__(self):
        blocks = tuple(int(m) for m in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        if len(blocks) < 1 or any(m < 1 for m in blocks):
            raise ValueError(f"invalid block sizes {blocks}")

    @property
    def d(self):
        return len(self.blocks)

    @property
    def n(self):
        return sum(self.blocks)

    def block_slices(self):
        out, start = [], 0
        for m in self.blocks:
            out.append((start, start + m))
            start += m
        return out

    def block_of(self, var: int) -> int:
        start = 0
        for i, m in enumerate(self.blocks):
            if var < start + m:
                return i
            start += m
        raise IndexError(f"variable index {var} out of range")

    def var(self, k: int) -> tuple:
        """Exponent tuple of the k-th variable (0-based)."""
        if not 0 <= k < self.n:
            raise IndexError(f"variable index {k} out of range")
        return tuple(1 if i == k else 0 for i in range(self.n))

    def one(self) -> tuple:
        return (0,) * self.n

    def mdeg(self, m: tuple) -> tuple:
        """Multidegree in Z^d: per-block exponent sums."""
        return tuple(sum(m[a:b]) for a, b in self.block_slices())

    def as_mdeg(self, alpha) -> tuple:
        if isinstance(alpha, int):
            if self.d != 1:
                raise ValueError("integer degree given for a multigraded ring")
            return (alpha,)
        alpha = tuple(int(a) for a in alpha)
        if len(alpha) != self.d:
            raise ValueError(f"multidegree {alpha} has wrong length")
        return alpha

    def var_name(self, k: int) -> str:
        if self.d == 1:
            return f"x{k + 1}"
        i = self.block_of(k)
        j = k - sum(self.blocks[:i])
        return f"x{i + 1}{j + 1}"

    def monomial_str(self, m: tuple) -> str:
        if not any(m):
            return "1"
        parts = []
        for k, e in enumerate(m):
            if e == 1:
                parts.append(self.var_name(k))
            elif e > 1:
                parts.append(f"{self.var_name(k)}^{e}")
        return "*".join(parts)


def total_deg(m: tuple) -> int:
    return sum(m)


def mon_mul(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def mon_divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mon_div(a: tuple, b: tuple) -> tuple:
    """a / b; requires b | a."""
    out = tuple(x - y for x, y in zip(a, b))
    if any(e < 0 for e in out):
        raise ValueError("non-divisible monomial quotient")
    return out


def mon_lcm(a: tuple, b: tuple) -> tuple:
    return tuple(max(x, y) for x, y in zip(a, b))


def mon_key(m: tuple):
    """Sort key for graded lex with the first variable largest."""
    return (sum(m), tuple(-e for e in m))


def _compositions(total: int, parts: int):
    """All exponent tuples of length `parts` summing to `total`, lex-descending."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def component_basis(ring: RingConfig, alpha) -> list:
    """All monomials of multidegree alpha, in the fixed (graded lex) order."""
    alpha = ring.as_mdeg(alpha)
    if any(a < 0 for a in alpha):
        return []
    per_block = [list(_compositions(c, m)) for c, m in zip(alpha, ring.blocks)]
    out = []
    for combo in product(*per_block):
        exps = tuple(e for part in combo for e in part)
        out.append(exps)
    out.sort(key=mon_key)
    return out


def component_dim(ring: RingConfig, alpha) -> int:
    alpha = ring.as_mdeg(alpha)
    if any(a < 0 for a in alpha):
        return 0
    dim = 1
    for c, m in zip(alpha, ring.blocks):
        dim *= comb(c + m - 1, m - 1)
    return dim


def monomials_of_total_degree(ring: RingConfig, k: int):
    """All monomials of total degree k, over every multidegree."""
    if ring.d == 1:
        yield from component_basis(ring, k)
        return
    for split in _compositions(k, ring.d):
        yield from component_basis(ring, split)


class MonomialIdeal:
    """Monomial ideal stored by its minimal generators in the fixed order."""

    def __init__(self, ring: RingConfig, gens):
        self.ring = ring
        gens = {tuple(int(e) for e in g) for g in gens}
        for g in gens:
            if len(g) != ring.n:
                raise ValueError(f"generator {g} has wrong length")
            if any(e < 0 for e in g):
                raise ValueError(f"generator {g} has negative exponent")
        if ring.one() in gens:
            raise ValueError("unit ideal: the paper assumes proper ideals")
        minimal = [
            g
            for g in gens
            if not any(h != g and mon_divides(h, g) for h in gens)
        ]
        minimal.sort(key=mon_key)
        self.gens = tuple(minimal)

    @property
    def r(self):
        return len(self.gens)

    def contains(self, m: tuple) -> bool:
        return any(mon_divides(g, m) for g in self.gens)

    def gen_index(self, g: tuple) -> int:
        """1-based index of a generator, matching the paper's e_i labels."""
        return self.gens.index(tuple(g)) + 1

    def max_gen_degree(self) -> int:
        return max(total_deg(g) for g in self.gens) if self.gens else 0

    def is_equigenerated(self):
        """The common multidegree of the generators, or None."""
        degs = {self.ring.mdeg(g) for g in self.gens}
        return next(iter(degs)) if len(degs) == 1 else None

    def __eq__(self, other):
        return (
            isinstance(other, MonomialIdeal)
            and self.ring == other.ring
            and self.gens == other.gens
        )

    def __hash__(self):
        return hash((self.ring, self.gens))

    def __repr__(self):
        names = ", ".join(self.ring.monomial_str(g) for g in self.gens)
        return f"MonomialIdeal({names})"


def power_ideal(ring: RingConfig, c) -> MonomialIdeal:
    """The product ideal m^c = prod_i m_i^{c_i}; minimal gens = S_c monomials."""
    c = ring.as_mdeg(c)
    if any(ci < 0 for ci in c):
        raise ValueError(f"negative power vector {c}")
    if all(ci == 0 for ci in c):
        raise ValueError("zero power vector")
    return MonomialIdeal(ring, component_basis(ring, c))


def is_strongly_stable(I: MonomialIdeal) -> bool:
    """Closure of the generators under x_i -> x_j exchanges for j < i (d = 1)."""
    if I.ring.d != 1:
        raise ValueError("strong stability is defined for the standard grading")
    for u in I.gens:
        for i in range(I.ring.n):
            if u[i] == 0:
                continue
            for j in range(i):
                moved = list(u)
                moved[i] -= 1
                moved[j] += 1
                if not I.contains(tuple(moved)):
                    return False
    return True


def borel_closure(ring: RingConfig, seed) -> MonomialIdeal:
    """Smallest strongly stable ideal containing the seed monomials (d = 1)."""
    if ring.d != 1:
        raise ValueError("Borel closure is defined for the standard grading")
    seen = {tuple(m) for m in seed}
    queue = list(seen)
    while queue:
        u = queue.pop()
        for i in range(ring.n):
            if u[i] == 0:
                continue
            for j in range(i):
                moved = list(u)
                moved[i] -= 1
                moved[j] += 1
                moved = tuple(moved)
                if moved not in seen:
                    seen.add(moved)
                    queue.append(moved)
    return MonomialIdeal(ring, seen)


def quotient_component_dim(I: MonomialIdeal, alpha) -> int:
    """dim [S/I]_alpha: monomials of multidegree alpha outside I."""
    return sum(1 for m in component_basis(I.ring, alpha) if not I.contains(m))


def monomial_quotient_dim(I: MonomialIdeal) -> int:
    """Krull dimension of S/I by exhaustive search over variable subsets."""
    n = I.ring.n
    supports = [frozenset(k for k in range(n) if g[k] > 0) for g in I.gens]
    best = 0
    for size in range(n, 0, -1):
        for Y in combinations(range(n), size):
            outside = set(range(n)) - set(Y)
            if all(s & outside for s in supports):
                return size
    return best


def power_containment(I: MonomialIdeal, k: int) -> bool:
    """True iff every monomial of total degree k lies in I."""
    if k < 0:
        raise ValueError("negative power")
    return all(I.contains(m) for m in monomials_of_total_degree(I.ring, k))


def taylor_caps(I: MonomialIdeal) -> dict:
    """Degree caps from the Taylor complex: t_i(S/I) <= max deg lcm of i gens."""
    caps = {}
    for i in range(1, min(I.r, I.ring.n) + 1):
        caps[i] = max(
            total_deg(_lcm_of(subset)) for subset in combinations(I.gens, i)
        )
    return caps


def _lcm_of(monomials):
    out = monomials[0]
    for m in monomials[1:]:
        out = mon_lcm(out, m)
    return out


def ideal_from_dict(data: dict) -> MonomialIdeal:
    """Load an ideal from the JSON schema:
    {"blocks": [...], "generators": [[e, ...], ...]} or
    {"blocks": [...], "power": [c1, ..., cd]}.
    """
    ring = RingConfig(tuple(data["blocks"]))
    if "power" in data:
        return power_ideal(ring, tuple(data["power"]))
    if "generators" in data:
        return MonomialIdeal(ring, [tuple(g) for g in data["generators"]])
    raise ValueError("ideal dict needs 'generators' or 'power'")


def reg_monomial_ideal(I: MonomialIdeal):
    """(reg(I), certified).  Strongly stable: max generator degree.

    Otherwise reg(S/I) is computed from Tor_i(S/I, K) scanned up to the Taylor
    caps, which certify vanishing beyond; reg(I) = reg(S/I) + 1.
    """
    if I.ring.d != 1:
        raise ValueError("regularity over the standard grading only")
    if is_strongly_stable(I):
        return I.max_gen_degree(), True
    from .homology import quotient_ring_module, tor_dims
    from .fields import QQ

    M = quotient_ring_module(I.ring, I, QQ)
    caps = taylor_caps(I)
    reg = 0
    for i, cap in caps.items():
        for j in range(i, cap + 1):
            if tor_dims(M, i, j) > 0:
                reg = max(reg, j - i)
    return reg + 1, True
