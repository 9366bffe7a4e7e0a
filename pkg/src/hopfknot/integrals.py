"""Integrals, cointegrals, distinguished group-likes, sphericality, ribbon data.

Conventions (all verified exactly, on basis elements):

    right integral    lambda(x_(1)) x_(2) = lambda(x) 1_H
    left cointegral   x Lambda = eps(x) Lambda
    distinguished     Lambda v = alpha(v) Lambda,   f lambda = f(a) lambda
    unimodular        alpha = eps
    pivotal           S^2(x) = g x g^-1, g group-like
    spherical         pivotal + unimodular + g^2 = a
    symmetrized       mu := lambda(g #), with mu(xy) = mu(yx), mu o S = mu

Both integral solvers run an exact kernel computation of the defining linear
system; in finite dimension the solution space is one-dimensional, and any
other kernel dimension signals corrupted input.
"""

from __future__ import annotations

from .errors import (AmbiguousIntegral, AxiomFailure, DegeneratePairing,
                     InconsistentSystem, MissingPivot, NoIntegral,
                     NotNondegenerate, NotQuasitriangular, NotSpherical)
from .hopf import HopfAlgebra, all_pass, verify_hopf_axioms
from .linalg import nullspace

__all__ = [
    "compute_right_integral", "compute_left_cointegral", "normalize_pair",
    "distinguished_group_likes", "is_unimodular", "verify_spherical",
    "symmetrized_integral", "SphericalData", "spherical_data",
    "verify_quasitriangular", "ribbon_element", "RibbonChecks",
]


def compute_right_integral(H: HopfAlgebra) -> list:
    """Dense covector lambda with lambda(x_(1)) x_(2) = lambda(x) 1_H."""
    f = H.field
    n = H.dim
    rows = []
    for i in range(n):
        for k in range(n):
            row: dict = {}
            for (j, kk), v in H.comult[i].items():
                if kk == k:
                    row[j] = f.add(row.get(j, f.zero), v)
            u = H.unit.get(k, f.zero)
            if not f.is_zero(u):
                row[i] = f.sub(row.get(i, f.zero), u)
            if row:
                rows.append(row)
    basis = nullspace(f, rows, n)
    if len(basis) == 0:
        raise NoIntegral("right integral system has trivial kernel")
    if len(basis) > 1:
        raise AmbiguousIntegral(f"right integral space has dim {len(basis)}")
    return basis[0]


def compute_left_cointegral(H: HopfAlgebra) -> dict:
    """Element vector Lambda with x Lambda = eps(x) Lambda."""
    f = H.field
    n = H.dim
    rows = []
    for i in range(n):
        ei = H.counit[i]
        for k in range(n):
            row: dict = {}
            for j in range(n):
                v = H.mult.get((i, j), {}).get(k)
                if v is not None:
                    row[j] = f.add(row.get(j, f.zero), v)
            if not f.is_zero(ei):
                row[k] = f.sub(row.get(k, f.zero), ei)
            if row:
                rows.append(row)
    basis = nullspace(f, rows, n)
    if len(basis) == 0:
        raise NoIntegral("left cointegral system has trivial kernel")
    if len(basis) > 1:
        raise AmbiguousIntegral(f"left cointegral space has dim {len(basis)}")
    return {i: v for i, v in enumerate(basis[0]) if not f.is_zero(v)}


def normalize_pair(H: HopfAlgebra, lam: list, Lam: dict):
    """Rescale Lambda so that lambda(Lambda) = 1."""
    f = H.field
    pairing = f.sum(f.mul(lam[i], v) for i, v in Lam.items())
    if f.is_zero(pairing):
        raise DegeneratePairing("lambda(Lambda) = 0")
    inv = f.inv(pairing)
    return lam, {i: f.mul(inv, v) for i, v in Lam.items()}


def distinguished_group_likes(H: HopfAlgebra, lam: list, Lam: dict):
    """(alpha, a): Lambda v = alpha(v) Lambda and f lambda = f(a) lambda."""
    f = H.field
    n = H.dim
    pivot_idx = min(Lam)  # lowest nonzero coordinate of Lambda breaks the tie
    alpha = []
    for i in range(n):
        prod = H.mul_vec(Lam, H.basis_vec(i))
        c = f.div(prod.get(pivot_idx, f.zero), Lam[pivot_idx])
        if not H.vec_eq(prod, H.vec_scale(c, Lam)):
            raise InconsistentSystem(f"Lambda e_{i} is not a multiple of Lambda")
        alpha.append(c)
    lam_idx = next(i for i in range(n) if not f.is_zero(lam[i]))
    a_vec: dict = {}
    for i in range(n):
        # (e_i^* lambda)(x) = e_i^*(x_(1)) lambda(x_(2)), read off at basis x
        conv = [f.zero] * n
        for x in range(n):
            for (j, k), v in H.comult[x].items():
                if j == i:
                    conv[x] = f.add(conv[x], f.mul(v, lam[k]))
        c = f.div(conv[lam_idx], lam[lam_idx])
        if any(not f.eq(conv[x], f.mul(c, lam[x])) for x in range(n)):
            raise InconsistentSystem(f"e_{i}^* lambda is not a multiple of lambda")
        if not f.is_zero(c):
            a_vec[i] = c
    return alpha, a_vec


def is_unimodular(H: HopfAlgebra) -> bool:
    lam = compute_right_integral(H)
    Lam = compute_left_cointegral(H)
    lam, Lam = normalize_pair(H, lam, Lam)
    alpha, _ = distinguished_group_likes(H, lam, Lam)
    f = H.field
    return all(f.eq(alpha[i], H.counit[i]) for i in range(H.dim))


def verify_spherical(H: HopfAlgebra) -> bool:
    """Pivot axioms + unimodularity + g^2 = a."""
    if H.pivot is None:
        raise MissingPivot("spherical check needs an explicit pivot")
    checks = verify_hopf_axioms(H)
    piv_ok = all(c.ok for c in checks
                 if c.name in ("pivot_group_like", "pivot_conjugation"))
    if not piv_ok:
        return False
    lam = compute_right_integral(H)
    Lam = compute_left_cointegral(H)
    lam, Lam = normalize_pair(H, lam, Lam)
    alpha, a_vec = distinguished_group_likes(H, lam, Lam)
    f = H.field
    if not all(f.eq(alpha[i], H.counit[i]) for i in range(H.dim)):
        return False
    g2 = H.mul_vec(H.pivot, H.pivot)
    return H.vec_eq(g2, a_vec)


def symmetrized_integral(H: HopfAlgebra, lam: list) -> list:
    """mu = lambda(g #); verifies the three symmetrized-integral axioms."""
    if H.pivot is None:
        raise MissingPivot("symmetrized integral needs the pivot")
    if not verify_spherical(H):
        raise NotSpherical(f"{H.name or H} is not spherical")
    f = H.field
    n = H.dim
    mu = [f.zero] * n
    for i in range(n):
        gx = H.mul_vec(H.pivot, H.basis_vec(i))
        mu[i] = f.sum(f.mul(v, lam[k]) for k, v in gx.items())

    def mu_of(vec: dict):
        return f.sum(f.mul(v, mu[k]) for k, v in vec.items())

    # axiom 1: mu(x_(1)) g x_(2) = mu(x) 1_H
    for i in range(n):
        acc: dict = {}
        for (j, k), v in H.comult[i].items():
            c = f.mul(v, mu[j])
            if f.is_zero(c):
                continue
            gk = H.mul_vec(H.pivot, H.basis_vec(k))
            for t, vt in gk.items():
                s = f.add(acc.get(t, f.zero), f.mul(c, vt))
                if f.is_zero(s):
                    acc.pop(t, None)
                else:
                    acc[t] = s
        if not H.vec_eq(acc, H.vec_scale(mu[i], H.unit)):
            raise AxiomFailure(f"symmetrized integral axiom 1 fails at basis {i}")
    # axiom 2: trace property on basis pairs
    for i in range(n):
        for j in range(n):
            if not f.eq(mu_of(H.mult.get((i, j), {})),
                        mu_of(H.mult.get((j, i), {}))):
                raise AxiomFailure(f"mu(xy) != mu(yx) at basis pair {(i, j)}")
    # axiom 3: mu o S = mu
    for i in range(n):
        if not f.eq(mu_of(H.antipode[i]), mu[i]):
            raise AxiomFailure(f"mu(S(x)) != mu(x) at basis {i}")
    return mu


class SphericalData:
    """Normalized integral package for a spherical algebra."""

    def __init__(self, H: HopfAlgebra, lam, Lam, alpha, a, mu):
        self.algebra = H
        self.lam = lam      # dense covector
        self.Lam = Lam      # sparse vector, lambda(Lambda) = 1
        self.alpha = alpha  # dense covector
        self.a = a          # sparse vector
        self.mu = mu        # dense covector

    def mu_of(self, vec: dict):
        f = self.algebra.field
        return f.sum(f.mul(v, self.mu[k]) for k, v in vec.items())

    def lam_of(self, vec: dict):
        f = self.algebra.field
        return f.sum(f.mul(v, self.lam[k]) for k, v in vec.items())


_SPHERICAL_CACHE: dict = {}


def spherical_data(H: HopfAlgebra) -> SphericalData:
    key = id(H)
    if key not in _SPHERICAL_CACHE:
        if H.pivot is None:
            raise MissingPivot("algebra carries no pivot")
        if not verify_spherical(H):
            raise NotSpherical(f"{H.name or H} is not spherical")
        lam = compute_right_integral(H)
        Lam = compute_left_cointegral(H)
        lam, Lam = normalize_pair(H, lam, Lam)
        alpha, a = distinguished_group_likes(H, lam, Lam)
        mu = symmetrized_integral(H, lam)
        _SPHERICAL_CACHE[key] = SphericalData(H, lam, Lam, alpha, a, mu)
    return _SPHERICAL_CACHE[key]


# -- quasitriangular / ribbon ------------------------------------------------

def verify_quasitriangular(H: HopfAlgebra, r_pairs: list) -> list:
    """Check the three R-matrix identities for R = sum r_t (x) s_t.

    ``r_pairs`` is a list of (r_vec, s_vec) element-vector pairs.  Returns a
    list of (identity index, ok, witness); raises nothing.
    """
    f = H.field
    out = []

    def t3_add(acc, key, c):
        s = f.add(acc.get(key, f.zero), c)
        if f.is_zero(s):
            acc.pop(key, None)
        else:
            acc[key] = s

    # (1)  sum Delta(r_t) (x) s_t = sum r_t (x) r_u (x) s_t s_u
    lhs: dict = {}
    for r, s in r_pairs:
        dr = H.comult_vec(r)
        for (a, b), v in dr.items():
            for k, w in s.items():
                t3_add(lhs, (a, b, k), f.mul(v, w))
    rhs: dict = {}
    for rt, st in r_pairs:
        for ru, su in r_pairs:
            prod = H.mul_vec(st, su)
            for a, va in rt.items():
                for b, vb in ru.items():
                    c = f.mul(va, vb)
                    for k, vk in prod.items():
                        t3_add(rhs, (a, b, k), f.mul(c, vk))
    out.append((1, lhs == rhs, None if lhs == rhs else "Delta x id identity"))

    # (2)  sum r_t (x) Delta(s_t) = sum r_u r_t (x) s_t (x) s_u
    lhs = {}
    for r, s in r_pairs:
        ds = H.comult_vec(s)
        for a, va in r.items():
            for (b, k), v in ds.items():
                t3_add(lhs, (a, b, k), f.mul(va, v))
    rhs = {}
    for rt, st in r_pairs:
        for ru, su in r_pairs:
            prod = H.mul_vec(ru, rt)
            for b, vb in st.items():
                for k, vk in su.items():
                    c = f.mul(vb, vk)
                    for a, va in prod.items():
                        t3_add(rhs, (a, b, k), f.mul(c, va))
    out.append((2, lhs == rhs, None if lhs == rhs else "id x Delta identity"))

    # (3)  tau(Delta(h)) R = R Delta(h) for all basis h
    bad = None
    for h in range(H.dim):
        dh = H.comult[h]
        lhs2: dict = {}
        rhs2: dict = {}
        for (a, b), v in dh.items():
            for rt, st in r_pairs:
                # tau(Delta h) R : (b (x) a) * (r (x) s)
                for i, vi in H.mul_vec({b: v}, rt).items():
                    for j, vj in H.mul_vec({a: f.one}, st).items():
                        t3_add(lhs2, (i, j), f.mul(vi, vj))
                # R Delta(h) : (r (x) s) * (a (x) b)
                for i, vi in H.mul_vec(rt, {a: v}).items():
                    for j, vj in H.mul_vec(st, {b: f.one}).items():
                        t3_add(rhs2, (i, j), f.mul(vi, vj))
        if lhs2 != rhs2:
            bad = h
            break
    out.append((3, bad is None, bad))
    return out


def require_quasitriangular(H: HopfAlgebra, r_pairs: list):
    for idx, ok, witness in verify_quasitriangular(H, r_pairs):
        if not ok:
            raise NotQuasitriangular(f"identity {idx} failed ({witness!r})")


class RibbonChecks:
    """theta, u, their inverses, and the exact ribbon/sphericality report."""

    def __init__(self, theta, theta_inv, u, u_inv, checks):
        self.theta = theta
        self.theta_inv = theta_inv
        self.u = u
        self.u_inv = u_inv
        self.checks = checks  # list[(name, ok)]

    def all_ok(self):
        return all(ok for _, ok in self.checks)


def ribbon_element(H: HopfAlgebra, r_pairs: list) -> RibbonChecks:
    """theta = m(tau((g (x) 1) R)) = sum s_t g r_t, with the full check list.

    Requires the pivot.  Verifies theta = m((1 (x) g^-1) R), S(theta) = theta,
    centrality, eps(theta) = 1, the Delta(theta) identity, and the Drinfeld
    element relations S^2 = u # u^-1, u S(u) = S(u) u central, theta^-2 = uS(u),
    u = theta^-1 g.
    """
    if H.pivot is None:
        raise MissingPivot("ribbon element needs the pivot")
    f = H.field
    g = H.pivot
    ginv = H.pivot_inverse()
    theta: dict = {}
    alt: dict = {}
    u: dict = {}
    for r, s in r_pairs:
        theta = H.vec_add(theta, H.mul_many([s, g, r]))
        alt = H.vec_add(alt, H.mul_many([r, ginv, s]))
        u = H.vec_add(u, H.mul_vec(H.apply_s_power(s, 1), r))
    checks = []
    checks.append(("theta_two_forms", H.vec_eq(theta, alt)))
    checks.append(("S_theta", H.vec_eq(H.apply_s_power(theta, 1), theta)))
    central = all(H.vec_eq(H.mul_vec(theta, H.basis_vec(i)),
                           H.mul_vec(H.basis_vec(i), theta))
                  for i in range(H.dim))
    checks.append(("theta_central", central))
    checks.append(("eps_theta", f.eq(H.counit_vec(theta), f.one)))

    theta_inv = H.element_inverse(theta)
    u_inv = H.element_inverse(u)

    # S^2(h) = u h u^-1 on basis
    s2ok = all(H.vec_eq(H.apply_s_power(H.basis_vec(i), 2),
                        H.mul_many([u, H.basis_vec(i), u_inv]))
               for i in range(H.dim))
    checks.append(("drinfeld_S2", s2ok))
    usu = H.mul_vec(u, H.apply_s_power(u, 1))
    suu = H.mul_vec(H.apply_s_power(u, 1), u)
    checks.append(("uSu_symmetric", H.vec_eq(usu, suu)))
    checks.append(("uSu_central",
                   all(H.vec_eq(H.mul_vec(usu, H.basis_vec(i)),
                                H.mul_vec(H.basis_vec(i), usu))
                       for i in range(H.dim))))
    th2inv = H.mul_vec(theta_inv, theta_inv)
    checks.append(("theta_minus2_eq_uSu", H.vec_eq(th2inv, usu)))
    checks.append(("u_eq_thetainv_g", H.vec_eq(u, H.mul_vec(theta_inv, g))))

    # Delta(theta) = (sum s_u r_t (x) r_u s_t)(theta (x) theta)
    dtheta = H.comult_vec(theta)
    mix: dict = {}
    for rt, st in r_pairs:
        for ru, su in r_pairs:
            left = H.mul_vec(su, rt)
            right = H.mul_vec(ru, st)
            for a, va in left.items():
                for b, vb in right.items():
                    key = (a, b)
                    sv = f.add(mix.get(key, f.zero), f.mul(va, vb))
                    if f.is_zero(sv):
                        mix.pop(key, None)
                    else:
                        mix[key] = sv
    want: dict = {}
    for (a, b), v in mix.items():
        at = H.mul_vec({a: v}, theta)
        for i, vi in at.items():
            bt = H.mul_vec({b: f.one}, theta)
            for j, vj in bt.items():
                key = (i, j)
                sv = f.add(want.get(key, f.zero), f.mul(vi, vj))
                if f.is_zero(sv):
                    want.pop(key, None)
                else:
                    want[key] = sv
    checks.append(("Delta_theta", dtheta == want))
    return RibbonChecks(theta, theta_inv, u, u_inv, checks)


def hkr_normalization(H: HopfAlgebra, sph: SphericalData, theta, theta_inv):
    """(delta, delta_bar) with the non-degeneracy requirement checked."""
    f = H.field
    g = H.pivot
    ginv = H.pivot_inverse()
    delta = sph.mu_of(H.mul_vec(g, theta))
    delta_bar = sph.mu_of(H.mul_vec(ginv, theta_inv))
    if f.is_zero(f.mul(delta, delta_bar)):
        raise NotNondegenerate("mu(g theta) mu(g^-1 theta^-1) = 0")
    return delta, delta_bar
