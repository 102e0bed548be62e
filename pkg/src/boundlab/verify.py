"""Grid-based verification suites for the package's invariants.

Every property reduces to a signed margin: margin <= tolerance means the
instance satisfies the property, and a suite reports the worst margin over
its grid together with the offending instance. Suites are deterministic
(fixed grids, fixed seeds) so a clean build verifies identically anywhere.

These functions are the single source of truth for the inequality and
concavity/monotonicity acceptance gates; the CLI and the test suite both
call them rather than re-encoding the grids.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence

import numpy as np

from . import bounds as bnd
from . import codes as cds
from . import entropy as ent
from . import exponents as expn
from . import geometry as geo
from . import thresholds as thr
from .errors import BudgetExceededError
from .simulate import SimulationSpec, simulate


@dataclass(frozen=True)
class PropertyReport:
    suite: str
    name: str
    ok: bool
    worst_margin: float
    offender: Optional[str] = None
    checked: int = 0

    def line(self) -> str:
        status = "ok" if self.ok else "FAIL"
        where = f"  [{self.offender}]" if (self.offender and not self.ok) else ""
        return (f"{self.suite}/{self.name}: worst margin {self.worst_margin:.3e} "
                f"over {self.checked} instances -> {status}{where}")


class _Tracker:
    """Running max of a signed violation margin with its witness."""

    def __init__(self):
        self.worst = -math.inf
        self.offender: Optional[str] = None
        self.checked = 0

    def update(self, margin: float, witness: str) -> None:
        self.checked += 1
        if margin > self.worst:
            self.worst = margin
            self.offender = witness

    def report(self, suite: str, name: str, tol: float = 0.0,
               strict: bool = False) -> PropertyReport:
        if self.checked == 0:
            return PropertyReport(suite, name, True, -math.inf, None, 0)
        ok = self.worst < tol if strict else self.worst <= tol
        return PropertyReport(suite, name, ok, self.worst, self.offender,
                              self.checked)


# ---------------------------------------------------------------------------
# geometry

def _geometry_mu_nu_oracle(exhaustive_n: int = 10) -> List[PropertyReport]:
    mu_t = _Tracker()
    nu_t = _Tracker()
    for q in (2, 3):
        for n in range(1, exhaustive_n + 1):
            for w in range(n + 1):
                for t in range(n + 1):
                    got = geo.mu_exact(q, n, t, w)
                    ref = geo.brute_force_intersection(q, n, t, t, w, mode="ball")
                    mu_t.update(abs(got - ref), f"mu q={q} n={n} t={t} w={w}")
                    # spot-check the floor convention off the integer grid
                    if t < n:
                        got_f = geo.mu_exact(q, n, t + 0.5, w)
                        mu_t.update(abs(got_f - ref),
                                    f"mu q={q} n={n} t={t}.5 w={w}")
                for t1 in range(n + 1):
                    for t2 in range(n + 1):
                        got = geo.nu_exact(q, n, t1, t2, w)
                        ref = geo.brute_force_intersection(q, n, t1, t2, w,
                                                           mode="sphere")
                        nu_t.update(abs(got - ref),
                                    f"nu q={q} n={n} t1={t1} t2={t2} w={w}")
    return [mu_t.report("geometry", "mu-equals-brute-force"),
            nu_t.report("geometry", "nu-equals-brute-force")]


def _geometry_lemma_bounds(exhaustive_n: int = 10,
                           large_n: Sequence[int] = (50, 200, 3000)
                           ) -> List[PropertyReport]:
    up = _Tracker()   # mu <= n^2 q^{nM}
    low = _Tracker()  # nu_2 >= 2^{nM}/(4n), even w <= 2t <= n
    for q in (2, 3):
        for n in range(2, exhaustive_n + 1):
            t_hi = int(n * (1.0 - 1.0 / q))
            for t in range(1, t_hi + 1):
                p = t / n
                for w in range(0, min(2 * t, n) + 1):
                    mu = geo.mu_exact(q, n, t, w)
                    if mu == 0:
                        continue
                    m = expn.M_q(q, w / n, p)
                    bound = math.log(n * n) + n * m * math.log(q)
                    up.update(math.log(mu) - bound,
                              f"q={q} n={n} t={t} w={w}")
                    if q == 2 and w % 2 == 0 and 2 * t <= n and w >= 2:
                        nu = geo.nu_exact(2, n, t, t, w)
                        rhs = n * expn.M_binary(w / n, p) * math.log(2) \
                            - math.log(4 * n)
                        lnu = math.log(nu) if nu > 0 else -math.inf
                        low.update(rhs - lnu, f"n={n} t={t} w={w}")
    for n in large_n:
        for q in (2, 3):
            for p in (0.2, 0.4):
                t = p * n
                for gfrac in (0.5, 1.0, 1.5, 2.0):
                    w = int(round(gfrac * p * n))
                    if not 0 < w <= min(int(2 * t), n):
                        continue
                    lmu = geo.mu_log(q, n, t, w)
                    if lmu == -math.inf:
                        continue
                    m = expn.M_q(q, w / n, t / n)
                    bound = math.log(n * n) + n * m * math.log(q)
                    up.update(lmu - bound, f"q={q} n={n} t={t:g} w={w} (log)")
                    if q == 2 and w % 2 == 0 and 2 * t <= n:
                        lnu = geo.nu_log(2, n, t, t, w)
                        rhs = n * expn.M_binary(w / n, t / n) * math.log(2) \
                            - math.log(4 * n)
                        low.update(rhs - lnu, f"n={n} t={t:g} w={w} (log)")
    return [up.report("geometry", "lemma-6.2-upper", tol=1e-9),
            low.report("geometry", "lemma-6.3-lower", tol=1e-9)]


def _geometry_monotonicity(exhaustive_n: int = 10) -> List[PropertyReport]:
    tr = _Tracker()
    for q in (2, 3):
        for n in range(1, exhaustive_n + 1):
            for w in range(n + 1):
                prev = None
                for t in range(n + 1):
                    cur = geo.mu_exact(q, n, t, w)
                    if prev is not None:
                        tr.update(float(prev - cur),
                                  f"t-monotone q={q} n={n} t={t} w={w}")
                    prev = cur
            for t in range(n + 1):
                for w in range(min(2 * t, n)):
                    a = geo.mu_exact(q, n, t, w)
                    b = geo.mu_exact(q, n, t, w + 1)
                    if w + 1 <= 2 * t:
                        tr.update(float(b - a),
                                  f"w-monotone q={q} n={n} t={t} w={w}")
    return [tr.report("geometry", "mu-monotonicity")]


def _geometry_euclid() -> List[PropertyReport]:
    tr = _Tracker()
    for n in range(2, 41):
        for zeta in (0.6, 1.0, 1.6):
            for frac in (0.15, 0.35, 0.55, 0.75, 0.95):
                gamma = frac * zeta
                quad = geo.euclid_intersection(n, zeta * math.sqrt(n),
                                               2.0 * gamma * math.sqrt(n))
                lo, hi = geo.euclid_intersection_bounds(n, zeta, gamma)
                tag = f"n={n} zeta={zeta} gamma={gamma:.3f}"
                tr.update(lo - quad, f"{tag} (lower)")
                tr.update(quad - hi, f"{tag} (upper)")
    return [tr.report("geometry", "euclid-bounds-sandwich", tol=1e-9)]


def suite_geometry(exhaustive_n: int = 10) -> List[PropertyReport]:
    out = []
    out += _geometry_mu_nu_oracle(exhaustive_n)
    out += _geometry_lemma_bounds(exhaustive_n)
    out += _geometry_monotonicity(exhaustive_n)
    out += _geometry_euclid()
    return out


# ---------------------------------------------------------------------------
# exponents (entropy toolbox + exponent functionals)

def _lag_midpoint_concavity(values: np.ndarray, tol_tracker: _Tracker,
                            tag: str) -> None:
    """(f[i] + f[i+2L])/2 - f[i+L] <= 0 for every lag on a uniform grid."""
    n = len(values)
    for lag in range(1, (n - 1) // 2 + 1):
        mid = values[lag:n - lag]
        avg = 0.5 * (values[:n - 2 * lag] + values[2 * lag:])
        viol = avg - mid
        i = int(np.argmax(viol))
        tol_tracker.update(float(viol[i]), f"{tag} i={i} lag={lag}")


def _exponents_entropy(grid_points: int = 1000) -> List[PropertyReport]:
    conc = _Tracker()
    inv = _Tracker()
    tilde = _Tracker()
    zmono = _Tracker()
    lbin = _Tracker()
    xs = np.linspace(0.0, 1.0, grid_points)
    for q in (2, 3, 5, 17):
        vals = np.array([ent.q_entropy(q, float(x)) for x in xs])
        _lag_midpoint_concavity(vals, conc, f"H_{q}")
        top = 1.0 - 1.0 / q
        for x in np.linspace(0.0, top, 400):
            y = ent.q_entropy(q, float(x))
            back = ent.q_entropy_inverse(q, y)
            inv.update(abs(back - x), f"q={q} x={x:.6f}")
    for q in (3, 4, 5, 17):
        peak = 1.0 - 2.0 / q
        up = np.array([ent.q_entropy_tilde(q, float(x))
                       for x in np.linspace(0.0, peak, 300)])
        down = np.array([ent.q_entropy_tilde(q, float(x))
                         for x in np.linspace(peak, 1.0, 300)])
        tilde.update(float(np.max(up[:-1] - up[1:])), f"rise q={q}")
        tilde.update(float(np.max(down[1:] - down[:-1])), f"fall q={q}")
    for q in (2, 3, 5):
        ps = np.linspace(0.0, 1.0 - 1.0 / q, 400)
        zs = np.array([ent.bhattacharyya(ent.QSC(q, float(p))) for p in ps])
        zmono.update(float(np.max(zs[:-1] - zs[1:])), f"q={q}")
        zmono.update(abs(zs[-1] - 1.0), f"q={q} endpoint")
    for n in range(0, 65):
        for k in range(0, n + 1):
            exact = math.log(math.comb(n, k))
            lbin.update(abs(geo.log_binomial(n, k) - exact), f"n={n} k={k}")
    return [conc.report("exponents", "entropy-midpoint-concavity", tol=1e-12),
            inv.report("exponents", "entropy-inverse-roundtrip", tol=1e-10),
            tilde.report("exponents", "entropy-tilde-unimodal", tol=1e-12),
            zmono.report("exponents", "bhattacharyya-monotone", tol=1e-12),
            lbin.report("exponents", "log-binomial-exact", tol=1e-10)]


def _exponents_M(grid_points: int = 1000) -> List[PropertyReport]:
    conc = _Tracker()
    fdec = _Tracker()
    cont = _Tracker()
    deriv = _Tracker()
    zinv = _Tracker()
    for q in (2, 3, 5):
        top = 1.0 - 1.0 / q
        for pfrac in (0.3, 0.6, 0.9):
            p = pfrac * top
            g_hi = min(2.0 * p, 1.0)
            gs = np.linspace(0.0, g_hi, grid_points)
            vals = np.array([expn.M_q(q, float(g), p) for g in gs])
            _lag_midpoint_concavity(vals, conc, f"M q={q} p={p:.4f}")
        for gamma in (0.1, 0.3, 0.5):
            lo = gamma / 2.0 + 1e-6
            hi = top - 1e-9
            ps = np.linspace(lo, hi, grid_points)
            fs = np.array([expn.F_q(q, gamma, float(p)) for p in ps])
            d = fs[1:] - fs[:-1]
            i = int(np.argmax(d))
            fdec.update(float(d[i]), f"F q={q} gamma={gamma} i={i}")
        for gamma in (0.05, 0.2, 0.4):
            for p in np.linspace(gamma / 2 + 0.01, top - 0.01, 12):
                a = expn.M_q(q, gamma, float(p))
                b = expn.M_q(q, gamma + 1e-6, float(p) + 1e-6)
                cont.update(abs(a - b) - 1e-4, f"q={q} g={gamma} p={p:.4f}")
        for p in np.linspace(0.08, top - 0.05, 8):
            p = float(p)
            eps = 1e-5
            fd = (expn.M_q(q, eps, p) - expn.M_q(q, 0.0, p)) / eps
            ref = expn.dM_dgamma0_reference(q, p)
            deriv.update(abs(fd - ref) - 1e-3, f"q={q} p={p:.4f}")
    for q in (3, 5, 17):
        top = 1.0 - 1.0 / q
        for gamma in (0.05, 0.3, 0.8):
            for p in np.linspace(gamma / 2 + 1e-3, top - 1e-3, 20):
                p = float(p)
                if gamma > min(2 * p, 1.0):
                    continue
                sol = expn.solve_zeta(q, gamma, p)
                zinv.update(abs(sol.residual) - expn._ZETA_RESIDUAL * 1.01,
                            f"res q={q} g={gamma} p={p:.4f}")
                zinv.update(-sol.zeta, f"zeta<0 q={q} g={gamma} p={p:.4f}")
                zinv.update(sol.zeta - 1.0, f"zeta>1 q={q} g={gamma} p={p:.4f}")
                bref = expn.beta_of_zeta(q, sol.zeta)
                zinv.update(abs(sol.beta - bref) - 1e-12,
                            f"beta q={q} g={gamma} p={p:.4f}")
    return [conc.report("exponents", "M-concave-in-gamma", tol=1e-9),
            fdec.report("exponents", "F-strictly-decreasing-in-p", strict=True),
            cont.report("exponents", "M-continuity-modulus"),
            deriv.report("exponents", "M-derivative-at-zero"),
            zinv.report("exponents", "zeta-solution-invariants")]


def suite_exponents(grid_points: int = 1000) -> List[PropertyReport]:
    return _exponents_entropy(grid_points) + _exponents_M(grid_points)


# ---------------------------------------------------------------------------
# thresholds

def suite_thresholds(grid_points: int = 1000) -> List[PropertyReport]:
    rng_flip = _Tracker()
    mono = _Tracker()
    lsym_ub = _Tracker()
    gconc = _Tracker()
    gnneg = _Tracker()
    gcont = _Tracker()
    s2gt = _Tracker()
    s2mono = _Tracker()
    dual = _Tracker()
    tvz = _Tracker()

    for q in (2, 3, 9):
        top = 1.0 - 1.0 / q
        for lam in (0.3, 0.6, 0.9):
            prev = None
            for delta in np.linspace(0.02, top, 40):
                delta = float(delta)
                r = thr.p_star(q, lam, delta)
                rng_flip.update(delta / 2.0 - r.value - 1e-12,
                                f"low q={q} lam={lam} d={delta:.4f}")
                rng_flip.update(r.value - top - 1e-12,
                                f"high q={q} lam={lam} d={delta:.4f}")
                rhs = delta * (math.log(q - 1.0)
                               - math.log(q ** lam - 1.0)) / math.log(q)
                if not r.at_boundary:
                    lo, hi = r.bracket
                    rng_flip.update(rhs - expn.F_q(q, delta, lo),
                                    f"flip-lo q={q} lam={lam} d={delta:.4f}")
                    rng_flip.update(expn.F_q(q, delta, hi) - rhs - 1e-9,
                                    f"flip-hi q={q} lam={lam} d={delta:.4f}")
                if prev is not None:
                    mono.update(prev - r.value - 1e-9,
                                f"delta-mono q={q} lam={lam} d={delta:.4f}")
                prev = r.value
        for delta in (0.1, 0.3):
            vals = [thr.p_star(q, lam, delta).value
                    for lam in np.linspace(0.1, 1.0, 30)]
            worst = max(a - b for a, b in zip(vals, vals[1:]))
            mono.update(worst - 1e-9, f"lambda-mono q={q} d={delta}")

    for q in (2, 3, 4, 9, 17, 64):
        top = 1.0 - 1.0 / q
        for delta in np.linspace(top / 50, top, 50):
            delta = float(delta)
            lsym_ub.update(thr.lsym_lower_bound(q, delta) - delta - 1e-12,
                           f"q={q} d={delta:.4f}")

    for lam, rr in ((0.2, 0.5), (0.4, 0.6), (0.6, 0.8), (0.5, 0.5), (0.3, 0.9)):
        gs = np.linspace(0.0, 1.0, grid_points)
        vals = np.array([thr.g_perp(lam, rr, float(g)) for g in gs])
        _lag_midpoint_concavity(vals, gconc, f"gperp lam={lam} R={rr}")
        i = int(np.argmin(vals))
        gnneg.update(float(-vals[i]), f"lam={lam} R={rr} g={gs[i]:.4f}")
        knee = 1.0 - 2.0 ** (lam - 1.0)  # branch boundary in min(gamma, 1-gamma)
        for g0 in (knee, 1.0 - knee):
            if 1e-9 < g0 < 1.0 - 1e-9:
                a = thr.g_perp(lam, rr, g0 - 1e-12)
                b = thr.g_perp(lam, rr, g0 + 1e-12)
                gcont.update(abs(a - b) - 1e-9, f"knee lam={lam} R={rr} g={g0:.4f}")

    for lam in (0.3, 0.5, 0.7):
        prev = None
        for delta in np.linspace(0.01, 0.9, 30):
            delta = float(delta)
            s2 = thr.sigma2_star(lam, delta).value
            s2gt.update(delta - s2 + 1e-12, f"lam={lam} d={delta:.4f}")
            if prev is not None:
                s2mono.update(prev - s2, f"lam={lam} d={delta:.4f}")
            prev = s2

    for rr in (0.3, 0.5, 0.7):
        d_hi = 1.0 - 2.0 ** (rr - 1.0)
        for delta in np.linspace(d_hi / 25, d_hi, 25):
            delta = float(delta)
            a = thr.p_star_dual(rr, rr, delta).value
            b = thr.p_star(2, 1.0 - rr, delta).value
            dual.update(abs(a - b) - 1e-9, f"R={rr} d={delta:.5f}")

    for q in (16, 25, 49):
        cap = 1.0 - 1.0 / (math.isqrt(q) - 1.0)
        vals = [thr.tvz_upper_bound(q, float(d))
                for d in np.linspace(cap / 30, cap, 30)]
        tvz.update(max(a - b for a, b in zip(vals, vals[1:])), f"q={q}")

    return [rng_flip.report("thresholds", "pstar-range-and-bracket", tol=1e-9),
            mono.report("thresholds", "pstar-monotone"),
            lsym_ub.report("thresholds", "lsym-below-delta"),
            gconc.report("thresholds", "gperp-concave", tol=1e-9),
            gnneg.report("thresholds", "gperp-nonnegative", tol=1e-12),
            gcont.report("thresholds", "gperp-branch-continuity"),
            s2gt.report("thresholds", "sigma2star-exceeds-delta"),
            s2mono.report("thresholds", "sigma2star-monotone"),
            dual.report("thresholds", "dual-primal-coincidence"),
            tvz.report("thresholds", "tvz-monotone", strict=True)]


# ---------------------------------------------------------------------------
# codes

def suite_codes(lam_grid: Sequence[float] = (0.1, 0.3, 0.5, 0.7, 0.9)
                ) -> List[PropertyReport]:
    dualsz = _Tracker()
    transl = _Tracker()
    entcap = _Tracker()
    samo = _Tracker()
    dcount = _Tracker()
    for code in cds.corpus():
        dd = cds.dual(code)
        dualsz.update(abs(sum(cds.weight_distribution(dd).counts)
                          - code.q ** (code.n - code.k)), repr(code))
        base = cds.weight_distribution(code).counts
        words = code.codewords
        step = max(1, len(words) // 16)
        for idx in range(0, len(words), step):
            shifted = cds.weight_distribution(code, words[idx]).counts
            transl.update(0.0 if shifted == base else 1.0,
                          f"{code!r} x#{idx}")
        for lam in lam_grid:
            h = cds.erasure_entropy_exact(code, lam)
            entcap.update(h - code.n * lam * math.log2(code.q) - 1e-9,
                          f"{code!r} lam={lam}")
            lhs, rhs, _ = bnd.check_samorodnitsky(code, lam)
            samo.update(lhs - rhs - 1e-9, f"{code!r} lam={lam}")
        if code.q ** code.n <= 2 ** 24:
            for t2 in range(code.n // 2 + 1):
                L = cds.list_size_max(code, t2).L
                for t1 in range(code.n // 2 + 1):
                    r = bnd.check_double_counting(code, t1, t2, L=L)
                    dcount.update(r.max_violation - 1e-9,
                                  f"{code!r} t1={t1} t2={t2} w={r.worst_w}")
    return [dualsz.report("codes", "dual-size"),
            transl.report("codes", "weight-translation-invariance"),
            entcap.report("codes", "erasure-entropy-cap"),
            samo.report("codes", "samorodnitsky-corpus"),
            dcount.report("codes", "double-counting-corpus")]


# ---------------------------------------------------------------------------
# bounds (inequalities sandwiched against exact or Monte Carlo values)

def _random_binary_codes(count: int = 200):
    for i in range(count):
        n = 3 + (i % 8)
        k = 1 + (i // 8) % n
        yield cds.random_code(2, n, k, seed=7000 + i)


def suite_bounds(random_codes: int = 200, trials: int = 100000
                 ) -> List[PropertyReport]:
    samo = _Tracker()
    dweight = _Tracker()
    polt = _Tracker()
    union = _Tracker()
    sphere = _Tracker()
    symm = _Tracker()
    qec = _Tracker()

    for code in _random_binary_codes(random_codes):
        for lam in (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9):
            lhs, rhs, _ = bnd.check_samorodnitsky(code, lam)
            samo.update(lhs - rhs - 1e-9, f"{code!r} lam={lam}")

    for code in cds.corpus():
        for lam in (0.2, 0.5, 0.8):
            for w in range(code.n + 1):
                r = bnd.dual_weight_bound(code, lam, w)
                margin = r.actual - min(r.part1, r.part2) - 1e-9
                dweight.update(margin, f"{code!r} lam={lam} w={w}")

    for code in cds.corpus():
        if code.k == 0:
            continue
        weights = cds.weight_distribution(code)
        q = code.q
        exact_profile = None
        if q ** code.n <= 2 ** 24:
            exact_profile = bnd.qsc_error_profile(code)
        for p in (0.05, 0.1, 0.2):
            if p > 1.0 - 1.0 / q:
                continue
            bound = bnd.poltyrev_bound(weights, q, bnd.PoltyrevParams(p=p))
            if exact_profile is not None:
                truth = bnd.qsc_exact_block_error(code, p, exact_profile)
                label = "exact"
            else:
                res = simulate(SimulationSpec(
                    code=code, channel=ent.QSC(q, p), trials=trials, seed=4242))
                truth = res.block.ci95[0]
                label = "mc-lower-ci"
            polt.update(truth - bound - 1e-9,
                        f"{code!r} p={p} ({label})")
            lam = 1.0
            z = ent.bhattacharyya(ent.QSC(q, p))
            if z < 1.0:  # c = z at lam=1
                ub = bnd.union_bhattacharyya_bound(code, ent.QSC(q, p), lam)
                union.update(truth - ub - 1e-9, f"{code!r} p={p} ({label})")

    for code in cds.corpus():
        if code.q != 2 or code.k == 0:
            continue
        weights = cds.weight_distribution(code)
        for sigma2 in (0.3, 0.6):
            res = simulate(SimulationSpec(
                code=code, channel=ent.BAWGN(sigma2), trials=trials, seed=991))
            for s in (0.4, 1.0):
                ub = bnd.sphere_bound(weights,
                                      bnd.SphereBoundParams(sigma2=sigma2, s=s))
                sphere.update(res.block.ci95[1] - ub - 1e-9,
                              f"{code!r} s2={sigma2} s={s}")

    h74 = cds.hamming_7_4()
    r0 = simulate(SimulationSpec(code=h74, channel=ent.QSC(2, 0.1),
                                 trials=trials, seed=55))
    rc = simulate(SimulationSpec(code=h74, channel=ent.QSC(2, 0.1),
                                 trials=trials, seed=56,
                                 transmitted=tuple(int(v)
                                                   for v in h74.codewords[9])))
    overlap = min(r0.block.ci95[1], rc.block.ci95[1]) \
        - max(r0.block.ci95[0], rc.block.ci95[0])
    symm.update(-overlap, "hamming74 transmitted 0 vs codeword 9")

    for code in (cds.repetition_code(2, 5), cds.hamming_7_4(),
                 cds.full_space(3, 4)):
        lam = 0.45
        amb_exact, _, _ = cds.erasure_error_exact(code, lam)
        res = simulate(SimulationSpec(code=code, channel=ent.QEC(code.q, lam),
                                      trials=trials, seed=77))
        lo, hi = res.ambiguity.ci95
        qec.update(max(lo - amb_exact, amb_exact - hi), f"{code!r} lam={lam}")

    return [samo.report("bounds", "samorodnitsky-random-codes"),
            dweight.report("bounds", "dual-weight-bound"),
            polt.report("bounds", "poltyrev-dominates-exact"),
            union.report("bounds", "union-dominates-exact"),
            sphere.report("bounds", "sphere-dominates-mc"),
            symm.report("bounds", "simulation-translation-invariance", strict=True),
            qec.report("bounds", "qec-ambiguity-matches-exact")]


SUITES: Dict[str, Callable[[], List[PropertyReport]]] = {
    "geometry": suite_geometry,
    "exponents": suite_exponents,
    "thresholds": suite_thresholds,
    "codes": suite_codes,
    "bounds": suite_bounds,
}


def run_suites(names: Sequence[str]) -> List[PropertyReport]:
    out: List[PropertyReport] = []
    for name in names:
        out += SUITES[name]()
    return out
