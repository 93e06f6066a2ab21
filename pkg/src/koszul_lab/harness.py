"""Verification suites, corpus generation and counterexample probes.

Every theorem suite is falsification-style: a PASS means no violation was
found inside the certified or capped window recorded with each case.  Reports
serialize to canonical JSON that is byte-identical for identical inputs, so
wall-clock timing is reported separately and never embedded.

Unless a field is forced, regularity suites run over GF(32003) as an
accelerator and recheck every candidate violation over the rationals; a
nonzero Tor dimension over the rationals forces one mod p, so a zero mod p
certifies the rational zero and verdicts stay exact.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field as dc_field
from itertools import combinations, product
from math import comb

from .cycles import Multi2Checker, gen2_families, z1_power_component
from .exterior import (
    KoszulChain,
    alpha_map,
    boundary,
    formal_boundary,
    gamma_map,
    sign,
    wedge,
)
from .fields import QQ, PrimeField
from .homology import (
    Coefficients,
    KoszulComplex,
    cycle_module,
    degrees_upto,
    generates_up_to,
    homology_module,
    tor_dims,
    tor_violations,
)
from .linalg import Echelon
from .rings import (
    MonomialIdeal,
    RingConfig,
    borel_closure,
    component_dim,
    monomial_quotient_dim,
    power_containment,
    power_ideal,
    quotient_component_dim,
    reg_monomial_ideal,
    total_deg,
)
from .veronese import InfeasibleError, SegreVeroneseSpec, green_lazarsfeld_index

ACCEL_PRIME = 32003

DEFAULT_CAPS = {
    "slack": 2,
    "t_max": 3,
    "component_ceiling": 4000,
    "surge_degree": 10,
}


class UnknownSuiteError(ValueError):
    pass


@dataclass
class CaseRecord:
    index: int
    params: dict
    verdict: str  # pass | violation | candidate | infeasible
    window: dict | None = None
    details: dict = dc_field(default_factory=dict)

    def to_dict(self):
        return {
            "index": self.index,
            "params": self.params,
            "verdict": self.verdict,
            "window": self.window,
            "details": self.details,
        }


@dataclass
class SuiteReport:
    suite: str
    seed: int
    size: int
    caps: dict
    field_name: str
    cases: list
    summary: dict = dc_field(default_factory=dict)

    @property
    def verdict(self):
        verdicts = {c.verdict for c in self.cases}
        if "violation" in verdicts or "candidate" in verdicts:
            return "violation"
        if "infeasible" in verdicts:
            return "infeasible"
        return "pass"

    def to_dict(self):
        return {
            "suite": self.suite,
            "seed": self.seed,
            "size": self.size,
            "caps": self.caps,
            "field": self.field_name,
            "verdict": self.verdict,
            "summary": self.summary,
            "cases": [c.to_dict() for c in self.cases],
        }

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)


def ideal_params(I: MonomialIdeal) -> dict:
    return {
        "blocks": list(I.ring.blocks),
        "generators": [list(g) for g in I.gens],
    }


def random_monomial_ideal(rng, ring: RingConfig, max_deg=3, max_gens=4) -> MonomialIdeal:
    """Random monomial ideal from a bounded pool; non-minimal draws collapse."""
    n = ring.n
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        d = rng.randint(1, max_deg)
        exps = [0] * n
        for _ in range(d):
            exps[rng.randrange(n)] += 1
        gens.append(tuple(exps))
    return MonomialIdeal(ring, gens)


def artinianize(I: MonomialIdeal, power: int, skip=()) -> MonomialIdeal:
    """Add variable powers so that every variable outside `skip` is nilpotent."""
    ring = I.ring
    gens = list(I.gens)
    for k in range(ring.n):
        if k in skip:
            continue
        gens.append(tuple(power if i == k else 0 for i in range(ring.n)))
    return MonomialIdeal(ring, gens)


def _resolve_field(field, floor: int):
    """(working field, recheck-over-QQ flag) honoring a characteristic floor."""
    if field is None:
        return PrimeField(ACCEL_PRIME), True
    if 0 < field.characteristic <= floor:
        raise ValueError(f"field {field.name} violates characteristic floor > {floor}")
    return field, False


def _checked_tor_violations(module_factory, bound, slack, work_field, recheck):
    """Tor entries above the bound, confirmed over the rationals if accelerated."""
    cand = tor_violations(module_factory(work_field), bound, slack)
    if not cand or not recheck:
        return cand
    Mq = module_factory(QQ)
    out = []
    for i, j, _ in cand:
        d = tor_dims(Mq, i, j)
        if d > 0:
            out.append((i, j, d))
    return out


def _estimate_component(I: MonomialIdeal, t: int, q: int) -> int:
    if t > I.r:
        return 0
    degs = sorted(total_deg(g) for g in I.gens)
    base = sum(degs[:t])
    return comb(I.r, t) * component_dim(I.ring, max(q - base, 0))


def _feasible(I, t, qmax, caps) -> bool:
    return _estimate_component(I, t, qmax) <= caps["component_ceiling"]


def _random_t(rng, caps, r):
    t = rng.choice([1, 1, 2, 2, 3])
    return min(t, caps["t_max"], r)


# ---------------------------------------------------------------------------
# sign and canonical-map suites
# ---------------------------------------------------------------------------


def _suite_signs(seed, size, caps, field):
    checked = 0
    failures = []
    # every assignment of {1..6} to (unused, A, B, C)
    for slots in product(range(4), repeat=6):
        parts = ([], [], [])
        for x, s in zip(range(1, 7), slots):
            if s:
                parts[s - 1].append(x)
        A, B, C = (tuple(p) for p in parts)
        AB = tuple(sorted(A + B))
        BC = tuple(sorted(B + C))
        checked += 1
        # associativity of e_A ^ e_B ^ e_C
        if sign(A, B) * sign(AB, C) != sign(B, C) * sign(A, BC):
            failures.append([list(A), list(B), list(C), "associativity"])
        # graded anticommutativity
        if sign(A, B) != (-1) ** (len(A) * len(B)) * sign(B, A):
            failures.append([list(A), list(B), list(C), "anticommutativity"])
    case = CaseRecord(
        0,
        {"universe": 6, "checked": checked},
        "pass" if not failures else "violation",
        window={"exhaustive": True},
        details={"failures": failures},
    )
    return [case], {"checked": checked}


def _random_chain(rng, kz, t, max_extra=2):
    """Random homogeneous chain: random basis degree, random small coefficients."""
    I = kz.ideal
    ring = I.ring
    T = tuple(sorted(rng.sample(range(1, I.r + 1), t)))
    base = [0] * ring.d
    for i in T:
        g = ring.mdeg(I.gens[i - 1])
        base = [a + b for a, b in zip(base, g)]
    w = [0] * ring.n
    for _ in range(rng.randint(0, max_extra)):
        w[rng.randrange(ring.n)] += 1
    alpha = tuple(a + b for a, b in zip(base, ring.mdeg(tuple(w))))
    terms = {}
    for key in kz.basis(t, alpha):
        if rng.random() < 0.5:
            c = rng.randint(-3, 3)
            if c:
                terms[key] = c
    return KoszulChain(I, t, terms), alpha


def _formal_equal(left: dict, right: dict) -> bool:
    for T in set(left) | set(right):
        lc, rc = left.get(T), right.get(T)
        if lc is None:
            lc = KoszulChain.zero(rc.ideal, rc.t)
        if rc is None:
            rc = KoszulChain.zero(lc.ideal, lc.t)
        if lc != rc:
            return False
    return True


def _suite_maps(seed, size, caps, field):
    rng = random.Random(seed)
    cases = []
    idx = 0
    while idx < size:
        n = rng.choice([2, 3])
        ring = RingConfig((n,))
        I = random_monomial_ideal(rng, ring, max_deg=3, max_gens=8)
        if I.r < 2:
            continue
        kz = KoszulComplex(I)
        t = rng.randint(1, min(3, I.r))
        s = rng.randint(1, min(3, I.r - 1))
        f, alpha = _random_chain(rng, kz, t)
        a, _ = _random_chain(rng, kz, s)
        details = {}
        ok = True

        if t >= 2 and not boundary(boundary(f)).is_zero():
            ok = False
            details["phi_squared"] = "nonzero"
        lhs = boundary(wedge(a, f))
        rhs = wedge(boundary(a), f) + wedge(a, boundary(f)).scale((-1) ** s)
        if lhs != rhs:
            ok = False
            details["leibniz"] = "failed"
        if t >= 2:
            gsize = rng.randint(0, t - 1)
            gb = gamma_map(boundary(f), gsize)
            # outer differential: phi o gamma_{s+1} = gamma_s o phi
            if not _formal_equal(formal_boundary(gamma_map(f, gsize + 1), I), gb):
                ok = False
                details["gamma_outer"] = "failed"
            # inner differential commutes up to (-1)^s
            inner = {
                T: boundary(b).scale((-1) ** gsize)
                for T, b in gamma_map(f, gsize).items()
            }
            inner = {T: b for T, b in inner.items() if not b.is_zero()}
            if not _formal_equal(inner, gb):
                ok = False
                details["gamma_inner"] = "failed"
            # binomial recombination: sum e_I . b_I = C(t, s) f
            if alpha_map(gamma_map(f, gsize), I, t) != f.scale(comb(t, gsize)):
                ok = False
                details["binomial_recombination"] = "failed"
        cyc = kz.cycle_space(t, alpha)
        if cyc.vectors:
            vec = cyc.vectors[rng.randrange(len(cyc.vectors))]
            z = kz.vector_chain(t, alpha, vec)
            gsize = rng.randint(1, t)
            gm = gamma_map(z, gsize)
            for b in gm.values():
                if not boundary(b).is_zero():
                    ok = False
                    details["cycle_parts"] = "failed"
            if alpha_map(gm, I, t) != z.scale(comb(t, gsize)):
                ok = False
                details["alpha_beta"] = "failed"
        cases.append(
            CaseRecord(
                idx,
                {"ideal": ideal_params(I), "t": t, "s": s, "degree": list(alpha)},
                "pass" if ok else "violation",
                window={"random": True},
                details=details,
            )
        )
        idx += 1
    return cases, {}


# ---------------------------------------------------------------------------
# regularity falsification suites
# ---------------------------------------------------------------------------


def _smallest_power_degree(I: MonomialIdeal) -> int:
    """Smallest c with m^c inside I and I generated in degrees <= c."""
    c = I.max_gen_degree()
    while not power_containment(I, c):
        c += 1
        if c > 40:
            raise RuntimeError("ideal does not look artinian")
    return c


def _reg_suite(seed, size, caps, field, build_case):
    """Shared driver.  build_case(rng) -> (params, checks, window) or None
    to redraw; checks is a list of (label, module_factory, bound)."""
    slack = caps["slack"]
    rng = random.Random(seed)
    cases = []
    redrawn = 0
    work_field, recheck = _resolve_field(field, caps["char_floor"])
    while len(cases) < size and redrawn < 80 * size:
        built = build_case(rng)
        if built is None:
            redrawn += 1
            continue
        params, checks, window = built
        violations = []
        for label, factory, bound in checks:
            found = _checked_tor_violations(factory, bound, slack, work_field, recheck)
            for i, j, d in found:
                violations.append(
                    {"check": label, "i": i, "j": j, "dim": d, "bound": bound}
                )
        cases.append(
            CaseRecord(
                len(cases),
                params,
                "pass" if not violations else "violation",
                window=window,
                details={"violations": violations},
            )
        )
    return cases, {"redrawn": redrawn}


def _zh_factories(I, t):
    """Factories for Z_t and H_t sharing one complex per field."""
    cache = {}

    def get(f):
        if f not in cache:
            cache[f] = KoszulComplex(I, f)
        return cache[f]

    return (lambda f: cycle_module(get(f), t)), (lambda f: homology_module(get(f), t))


def _suite_regb(seed, size, caps, field):
    def build(rng):
        n = rng.choice([2, 2, 3])
        ring = RingConfig((n,))
        I = artinianize(random_monomial_ideal(rng, ring, 3, 3), rng.randint(2, 3))
        c = _smallest_power_degree(I)
        t = _random_t(rng, caps, I.r)
        bound_z = t * (c + 1)
        bound_h = bound_z + c - 1
        if not _feasible(I, t, bound_h + caps["slack"] + 1, caps):
            return None
        fz, fh = _zh_factories(I, t)
        params = {"ideal": ideal_params(I), "t": t, "c": c}
        window = {
            "bound_z": bound_z,
            "bound_h": bound_h,
            "slack": caps["slack"],
            "certified": True,
        }
        return params, [("Z", fz, bound_z), ("H", fh, bound_h)], window

    return _reg_suite(seed, size, caps, field, build)


def _suite_thm1(seed, size, caps, field):
    def build(rng):
        n = rng.choice([2, 3])
        ring = RingConfig((n,))
        I = random_monomial_ideal(rng, ring, 3, 3)
        if monomial_quotient_dim(I) > 1:
            I = artinianize(I, 3, skip=(rng.randrange(n),))
        regI, _ = reg_monomial_ideal(I)
        t = _random_t(rng, caps, I.r)
        bound = t * (regI + 1)
        if not _feasible(I, t, bound + caps["slack"] + 1, caps):
            return None
        fz, _ = _zh_factories(I, t)
        params = {
            "ideal": ideal_params(I),
            "t": t,
            "reg_I": regI,
            "dim": monomial_quotient_dim(I),
        }
        window = {"bound_z": bound, "slack": caps["slack"], "certified": False}
        return params, [("Z", fz, bound)], window

    return _reg_suite(seed, size, caps, field, build)


def _suite_greeny(seed, size, caps, field):
    def build(rng):
        n = rng.choice([2, 2, 3])
        ring = RingConfig((n,))
        I = artinianize(random_monomial_ideal(rng, ring, 3, 3), rng.randint(2, 3))
        c = I.max_gen_degree()
        v = quotient_component_dim(I, c)
        t = _random_t(rng, caps, I.r)
        bound_z = t * (c + 1) + v
        bound_h = bound_z + c - 1
        if not _feasible(I, t, bound_h + caps["slack"] + 1, caps):
            return None
        fz, fh = _zh_factories(I, t)
        params = {"ideal": ideal_params(I), "t": t, "c": c, "v": v}
        window = {
            "bound_z": bound_z,
            "bound_h": bound_h,
            "slack": caps["slack"],
            "certified": True,
        }
        return params, [("Z", fz, bound_z), ("H", fh, bound_h)], window

    return _reg_suite(seed, size, caps, field, build)


def _suite_remark_b(seed, size, caps, field):
    rng = random.Random(seed)
    cases = []
    while len(cases) < size:
        n = rng.choice([2, 2, 3])
        ring = RingConfig((n,))
        I = artinianize(random_monomial_ideal(rng, ring, 3, 3), rng.randint(2, 3))
        c = I.max_gen_degree()
        v = quotient_component_dim(I, c)
        ok = power_containment(I, c + v)
        cases.append(
            CaseRecord(
                len(cases),
                {"ideal": ideal_params(I), "c": c, "v": v},
                "pass" if ok else "violation",
                window={"exact": True, "certified": True},
                details={"power": c + v},
            )
        )
    return cases, {}


def _suite_piper(seed, size, caps, field):
    """Generation degrees of Z_t for strongly stable ideals."""
    rng = random.Random(seed)
    cases = []
    redrawn = 0
    work_field, recheck = _resolve_field(field, caps["char_floor"])
    while len(cases) < size and redrawn < 80 * size:
        n = rng.choice([2, 3])
        ring = RingConfig((n,))
        seeds = [
            random_monomial_ideal(rng, ring, 3, 2).gens[0]
            for _ in range(rng.randint(1, 2))
        ]
        I = borel_closure(ring, seeds)
        c = I.max_gen_degree()
        t = _random_t(rng, caps, I.r)
        bound = t * (c + 1)
        if not _feasible(I, t, bound + caps["slack"] + 1, caps):
            redrawn += 1
            continue
        M = cycle_module(KoszulComplex(I, work_field), t)
        high = []
        for j in range(bound + 1, bound + caps["slack"] + 1):
            d = tor_dims(M, 0, j)
            if d > 0 and recheck:
                d = tor_dims(cycle_module(KoszulComplex(I, QQ), t), 0, j)
            if d > 0:
                high.append({"j": j, "dim": d})
        cases.append(
            CaseRecord(
                len(cases),
                {"ideal": ideal_params(I), "t": t, "reg_I": c},
                "pass" if not high else "violation",
                window={"bound_gen": bound, "slack": caps["slack"], "certified": False},
                details={"generators_above_bound": high},
            )
        )
    return cases, {"redrawn": redrawn}


def _suite_sato(seed, size, caps, field):
    """Cycle regularity with quotient coefficients S/J for strongly stable I, J."""

    def build(rng):
        n = rng.choice([2, 3])
        ring = RingConfig((n,))
        I = borel_closure(ring, [random_monomial_ideal(rng, ring, 3, 2).gens[0]])
        J = borel_closure(ring, [random_monomial_ideal(rng, ring, 3, 2).gens[0]])
        reg_I = I.max_gen_degree()
        reg_SJ = J.max_gen_degree() - 1
        t = _random_t(rng, caps, I.r)
        bound = t * (reg_I + 1) + reg_SJ
        if not _feasible(I, t, bound + caps["slack"] + 1, caps):
            return None

        def factory(f):
            return cycle_module(KoszulComplex(I, f, Coefficients(ring, J)), t)

        params = {
            "ideal": ideal_params(I),
            "coeff_ideal": ideal_params(J),
            "t": t,
            "reg_I": reg_I,
            "reg_SJ": reg_SJ,
        }
        window = {"bound_z": bound, "slack": caps["slack"], "certified": False}
        return params, [("Z(I;S/J)", factory, bound)], window

    return _reg_suite(seed, size, caps, field, build)


# ---------------------------------------------------------------------------
# multigraded, cycle-generation and index suites
# ---------------------------------------------------------------------------


def _cycle_basis_chains(kz, t, alpha):
    cb = kz.cycle_space(t, alpha)
    return [kz.vector_chain(t, alpha, v) for v in cb.vectors]


MULTI_SPECS = [((2, 2), (1, 1)), ((2, 2), (2, 1)), ((2, 2), (1, 2))]


def _suite_multi(seed, size, caps, field):
    cases = []
    for idx, (blocks, cvec) in enumerate(MULTI_SPECS[:size] if size else MULTI_SPECS):
        ring = RingConfig(blocks)
        ideal = power_ideal(ring, cvec)
        kz = KoszulComplex(ideal)
        # degree-one pool: low-degree one-cycles plus the per-block extra cycles
        pool = []
        for alpha in degrees_upto(ring, cvec):
            pool.extend(_cycle_basis_chains(kz, 1, alpha))
        for blk in range(ring.d):
            udeg = tuple(ci + (1 if b == blk else 0) for b, ci in enumerate(cvec))
            pool.extend(_cycle_basis_chains(kz, 1, udeg))
        results = {}
        ok = True
        for t in (1, 2):
            bound = tuple(t * ci + (t - 1) for ci in cvec)
            candidates = []
            for alpha in degrees_upto(ring, bound):
                candidates.extend(_cycle_basis_chains(kz, t, alpha))
            for combo in combinations(pool, t):
                prod = combo[0]
                for g in combo[1:]:
                    prod = wedge(prod, g)
                if not prod.is_zero():
                    candidates.append(prod)
            D = tuple(b + 1 for b in bound)
            generated, first_fail = generates_up_to(candidates, ideal, t, D)
            results[f"t={t}"] = {
                "generated": generated,
                "window": list(D),
                "first_fail": list(first_fail) if first_fail else None,
            }
            ok = ok and generated
        cases.append(
            CaseRecord(
                idx,
                {"blocks": list(blocks), "c": list(cvec)},
                "pass" if ok else "violation",
                window={"capped": True},
                details=results,
            )
        )
    return cases, {}


MULTI2_CONFIGS = [
    {"blocks": (2, 2), "c": (1, 1), "block": 0},
    {"blocks": (3,), "c": (2,), "block": 0},
]


def _suite_multi2(seed, size, caps, field):
    cases = []
    for idx, cfg in enumerate(MULTI2_CONFIGS):
        checker = Multi2Checker(RingConfig(cfg["blocks"]), cfg["c"], cfg["block"], QQ)
        failures = []
        count = 0
        for a_mons, y_pairs, a_extra in checker.enumerate_trials():
            ok, _cert = checker.check(a_mons, y_pairs, a_extra)
            count += 1
            if not ok:
                failures.append(
                    {
                        "a": [list(a) for a in a_mons],
                        "pairs": [list(p) for p in y_pairs],
                        "extra": list(a_extra),
                    }
                )
        cases.append(
            CaseRecord(
                idx,
                {
                    "blocks": list(cfg["blocks"]),
                    "c": list(cfg["c"]),
                    "block": cfg["block"],
                    "factor": checker.u + 1,
                },
                "pass" if not failures else "violation",
                window={"exhaustive_trials": count, "certified": True},
                details={"failures": failures},
            )
        )
    return cases, {}


MAINCYC_COMBOS = [(n, c, t) for n in (2, 3) for c in (1, 2) for t in (1, 2, 3)]


def _suite_maincyc(seed, size, caps, field):
    """Z_t = Z_1^t in the generating window for powers of the maximal ideal."""
    cases = []
    for idx, (n, c, t) in enumerate(MAINCYC_COMBOS):
        ring = RingConfig((n,))
        ideal = power_ideal(ring, c)
        if t > ideal.r:
            cases.append(
                CaseRecord(
                    idx,
                    {"n": n, "c": c, "t": t},
                    "pass",
                    window={"rank_zero": True},
                    details={"note": "exterior power vanishes"},
                )
            )
            continue
        kz = KoszulComplex(ideal)
        start = t * (c + 1)
        mismatches = []
        dims = {}
        for j in range(start, start + caps["slack"] + 1):
            dz = len(kz.cycle_space(t, j).vectors)
            dp = len(z1_power_component(ideal, t, j).vectors)
            dims[str(j)] = {"Z": dz, "Z1_power": dp}
            if dz != dp:
                mismatches.append(j)
        cases.append(
            CaseRecord(
                idx,
                {"n": n, "c": c, "t": t},
                "pass" if not mismatches else "violation",
                window={"degrees": [start, start + caps["slack"]], "certified": True},
                details={"dims": dims, "mismatch_degrees": mismatches},
            )
        )
    return cases, {}


GEN2_SPECS = [(2, 2), (2, 3), (3, 2)]


def _suite_gen2(seed, size, caps, field):
    cases = []
    for idx, (n, c) in enumerate(GEN2_SPECS[:size] if size else GEN2_SPECS):
        ideal = power_ideal(RingConfig((n,)), c)
        families = gen2_families(n, c)
        D = 2 * c + 2
        generated, first_fail = generates_up_to(
            [f.chain for f in families], ideal, 2, D
        )
        cases.append(
            CaseRecord(
                idx,
                {"n": n, "c": c, "families": len(families)},
                "pass" if generated else "violation",
                window={"degree_bound": D, "certified": True},
                details={"first_fail": list(first_fail) if first_fail else None},
            )
        )
    return cases, {}


CHECK_SPECS = [((3,), (2,)), ((2, 2), (1, 1))]


def _suite_check(seed, size, caps, field):
    cases = []
    for idx, (blocks, cvec) in enumerate(CHECK_SPECS):
        spec = SegreVeroneseSpec(blocks, cvec)
        target = spec.min_c + 1
        try:
            res = green_lazarsfeld_index(spec, target, QQ)
        except InfeasibleError as exc:
            cases.append(
                CaseRecord(
                    idx,
                    {"blocks": list(blocks), "c": list(cvec)},
                    "infeasible",
                    details={"estimate": exc.estimate},
                )
            )
            continue
        cases.append(
            CaseRecord(
                idx,
                {"blocks": list(blocks), "c": list(cvec), "target": target},
                "pass" if res.satisfies(target) else "violation",
                window={"i_max": target, "certified": True},
                details={"index": res.describe(), "betti": res.table.to_dict()},
            )
        )
    return cases, {}


def _surge_tor1_dim(kz: KoszulComplex, j: int) -> int:
    """dim Tor_1(S/I, Z_1)_j from the presentation of S/I by its generators.

    Tor_1 = ker(mu) / im(Syz (x) Z_1), where mu multiplies the summand for
    u_i into Z_1 by u_i, and the syzygy module of I is exactly Z_1(I, S).
    """
    I = kz.ideal
    field = kz.field
    gdeg = [total_deg(g) for g in I.gens]
    offsets, comps = {}, {}
    offset = 0
    for gi in range(I.r):
        q = j - gdeg[gi]
        comps[gi] = (q, kz.cycle_space(1, q) if q >= 0 else None)
        offsets[gi] = offset
        offset += len(kz.basis(1, q)) if q >= 0 else 0
    dim_p = sum(len(cb.vectors) for _, cb in comps.values() if cb is not None)
    if dim_p == 0:
        return 0

    rel = Echelon(field)
    rel_rank = 0
    for e in range(0, j + 1):
        zb = kz.cycle_space(1, e)
        ncb = kz.cycle_space(1, j - e) if j - e >= 0 else None
        if not zb.vectors or ncb is None or not ncb.vectors:
            continue
        for zvec in zb.vectors:
            zchain = kz.vector_chain(1, e, zvec)
            for mvec in ncb.vectors:
                mchain = kz.vector_chain(1, j - e, mvec)
                total = {}
                for (T, w), cz in zchain.terms.items():
                    gi = T[0] - 1
                    piece = mchain.scale_monomial(w).scale(cz)
                    pv = kz.chain_vector(piece, (j - gdeg[gi],))
                    for col, v in pv.items():
                        col += offsets[gi]
                        total[col] = field.add(total.get(col, field.zero), v)
                total = {c: v for c, v in total.items() if not field.is_zero(v)}
                if total and rel.add(total):
                    rel_rank += 1

    mu = Echelon(field)
    mu_rank = 0
    for gi in range(I.r):
        q, cb = comps[gi]
        if cb is None:
            continue
        for vec in cb.vectors:
            chain = kz.vector_chain(1, q, vec).scale_monomial(I.gens[gi])
            img = kz.chain_vector(chain, (j,))
            if img and mu.add(img):
                mu_rank += 1
    return dim_p - rel_rank - mu_rank


def _suite_surge(seed, size, caps, field):
    """Tor_1(S/I, Z_1)_j = 0 iff one-cycle products span (Z_2)_j, for I = m^2."""
    ideal = power_ideal(RingConfig((2,)), 2)
    kz = KoszulComplex(ideal)
    mismatches = []
    table = {}
    for j in range(0, caps["surge_degree"] + 1):
        dz2 = len(kz.cycle_space(2, j).vectors)
        prods = Echelon(QQ)
        prod_rank = 0
        for a in range(0, j + 1):
            for f in _cycle_basis_chains(kz, 1, a):
                for g in _cycle_basis_chains(kz, 1, j - a):
                    p = wedge(f, g)
                    if p.is_zero():
                        continue
                    vec = kz.chain_vector(p, (j,))
                    if vec and prods.add(vec):
                        prod_rank += 1
        surjective = prod_rank == dz2
        tor1 = _surge_tor1_dim(kz, j)
        table[str(j)] = {"dim_Z2": dz2, "product_rank": prod_rank, "tor1": tor1}
        if (tor1 == 0) != surjective:
            mismatches.append(j)
    cases = [
        CaseRecord(
            0,
            {"n": 2, "c": 2, "s": 1, "t": 1},
            "pass" if not mismatches else "violation",
            window={"degrees": [0, caps["surge_degree"]], "certified": True},
            details={"by_degree": table, "mismatch_degrees": mismatches},
        )
    ]
    return cases, {}


SUITES = {
    "signs": (_suite_signs, 1),
    "maps": (_suite_maps, 200),
    "regb": (_suite_regb, 50),
    "thm1": (_suite_thm1, 50),
    "greeny": (_suite_greeny, 50),
    "remark_b": (_suite_remark_b, 50),
    "piper": (_suite_piper, 50),
    "sato": (_suite_sato, 50),
    "multi": (_suite_multi, len(MULTI_SPECS)),
    "multi2": (_suite_multi2, len(MULTI2_CONFIGS)),
    "maincyc": (_suite_maincyc, len(MAINCYC_COMBOS)),
    "gen2": (_suite_gen2, len(GEN2_SPECS)),
    "check": (_suite_check, len(CHECK_SPECS)),
    "surge": (_suite_surge, 1),
}

SUITE_CHAR_FLOORS = {
    "thm1": 3,
    "maincyc": 3,
    "multi2": 3,
    "check": 3,
    "gen2": 2,
}


def run_suite(name, seed=1, size=None, caps=None, field=None) -> SuiteReport:
    if name not in SUITES:
        raise UnknownSuiteError(
            f"unknown suite {name!r}; choose from {sorted(SUITES)}"
        )
    fn, default_size = SUITES[name]
    size = default_size if size is None else size
    merged = dict(DEFAULT_CAPS)
    merged.update(caps or {})
    merged.setdefault("char_floor", SUITE_CHAR_FLOORS.get(name, merged["t_max"]))
    if field is not None and 0 < field.characteristic <= merged["char_floor"]:
        raise ValueError(
            f"suite {name} needs characteristic 0 or > {merged['char_floor']}"
        )
    cases, summary = fn(seed, size, merged, field)
    field_name = "auto" if field is None else field.name
    return SuiteReport(name, seed, size, merged, field_name, cases, summary)


def probe_q1(seed=1, size=20, caps=None, field=None) -> SuiteReport:
    """Capped scans of reg Z_t for ideals of positive dimension.

    Entries above t(reg(I) + 1) are flagged as candidates, never refutations:
    the window is capped, not certified.
    """
    merged = dict(DEFAULT_CAPS)
    merged.update(caps or {})
    merged.setdefault("char_floor", merged["t_max"])
    rng = random.Random(seed)
    work_field, recheck = _resolve_field(field, merged["char_floor"])
    cases = []
    redrawn = 0
    max_excess = None
    while len(cases) < size and redrawn < 80 * size:
        n = rng.choice([2, 3])
        ring = RingConfig((n,))
        I = random_monomial_ideal(rng, ring, 3, 3)
        if monomial_quotient_dim(I) == 0:
            redrawn += 1
            continue
        regI, _ = reg_monomial_ideal(I)
        t = _random_t(rng, merged, I.r)
        bound = t * (regI + 1)
        if not _feasible(I, t, bound + merged["slack"] + 1, merged):
            redrawn += 1
            continue

        def factory(f, I=I, t=t):
            return cycle_module(KoszulComplex(I, f), t)

        found = _checked_tor_violations(
            factory, bound, merged["slack"], work_field, recheck
        )
        excess = max((j - i - bound for i, j, _ in found), default=None)
        if excess is not None:
            max_excess = excess if max_excess is None else max(max_excess, excess)
        cases.append(
            CaseRecord(
                len(cases),
                {
                    "ideal": ideal_params(I),
                    "t": t,
                    "reg_I": regI,
                    "dim": monomial_quotient_dim(I),
                },
                "candidate" if found else "pass",
                window={"bound": bound, "slack": merged["slack"], "certified": False},
                details={"entries_above_bound": [list(f) for f in found]},
            )
        )
    return SuiteReport(
        "probe_q1",
        seed,
        size,
        merged,
        "auto" if field is None else field.name,
        cases,
        {"max_observed_excess": max_excess, "redrawn": redrawn},
    )
