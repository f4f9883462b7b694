"""Randomized verification suites.

Each suite samples instances satisfying a theorem's hypotheses and records,
per property, how many trials ran, how many failed, the worst violation and
the first counterexample.  All randomness comes from one seed, so reports
are reproducible.
"""

from __future__ import annotations

import cmath
import logging
import math
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Optional

import numpy as np

from . import fixtures
from .pairing import (
    PairingOperator,
    is_T_orthogonal,
    is_isotropic,
    pair,
    pair_theta,
    t_perp_basis,
    theta_direction,
)
from .preserve import (
    adjoint_conjugate,
    hilbert_fit,
    is_T_isometry,
    lp_pairing_structure_check,
    preserver_scalar,
    preserves_T_orthogonality_sampled,
    rotation_bj_deviation,
    two_dim_hilbert_conditions,
)
from .sampling import (
    isotropic_vector,
    random_matrix,
    random_pairing,
    random_symmetric_pairing,
    random_t_isometry,
    random_vector,
)
from .serialize import to_jsonable
from .space import (
    PNormSpace,
    ScalarField,
    apply_functional,
    inverse_duality,
    is_bj_orthogonal,
    is_bj_orthogonal_smooth,
    p_norm,
    support_functional,
)
from .symmetry import (
    find_nonisotropic,
    halfspace_symmetry_check,
    is_operator_symmetric,
    is_theta_left_symmetric_at,
    symmetry_scalar,
    symmetry_verdict,
)

__all__ = ["PropertyRecord", "SuiteReport", "SUITES", "run_suite"]

log = logging.getLogger(__name__)

REAL, COMPLEX = ScalarField.REAL, ScalarField.COMPLEX
FIELDS = (REAL, COMPLEX)
DIMS = (2, 3, 4)
# scaled tolerance used by the Proposition-level checks
BASIC_TOL = 1e-10

# frozen thresholds for the Hilbert experiments (seed 42, 200 samples)
FIT_ACCEPT = 1e-8
FIT_REJECT = 0.01
ROTATION_ZERO = 1e-10
ROTATION_WITNESS = 1e-3


@dataclass
class PropertyRecord:
    id: str
    theorem: bool = True
    trials: int = 0
    failures: int = 0
    max_violation: float = 0.0
    counterexample: Any = None

    def check(self, ok: bool, violation: float = 0.0, inputs: Any = None):
        self.trials += 1
        if violation is not None and math.isfinite(violation):
            self.max_violation = max(self.max_violation, float(violation))
        if not ok:
            self.failures += 1
            if self.counterexample is None:
                self.counterexample = to_jsonable(inputs) if inputs is not None else {}

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "theorem": self.theorem,
            "trials": self.trials,
            "failures": self.failures,
            "max_violation": self.max_violation,
            "counterexample": self.counterexample,
        }


@dataclass
class SuiteReport:
    suite: str
    seed: int
    properties: list[PropertyRecord] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return all(p.failures == 0 for p in self.properties if p.theorem)

    def get(self, pid: str) -> PropertyRecord:
        for p in self.properties:
            if p.id == pid:
                return p
        raise KeyError(pid)

    def to_dict(self, include_time: bool = False) -> dict:
        d = {
            "suite": self.suite,
            "seed": self.seed,
            "passed": self.passed,
            "properties": [p.to_dict() for p in self.properties],
        }
        if include_time:
            d["wall_time"] = self.wall_time
        return d


class _Suite:
    def __init__(self, report: SuiteReport):
        self.report = report

    def prop(self, pid: str, theorem: bool = True) -> PropertyRecord:
        rec = PropertyRecord(pid, theorem)
        self.report.properties.append(rec)
        return rec


def _instance(rng, k):
    n = DIMS[k % len(DIMS)]
    fld = FIELDS[(k // len(DIMS)) % 2]
    return n, fld


def _kernel_combo(rng, T: PairingOperator, x, fld) -> np.ndarray:
    basis = t_perp_basis(T, x)
    return random_vector(rng, basis.shape[0], fld) @ basis


def _scaled(T, x, y) -> float:
    return is_T_orthogonal(T, x, y).gap


# --------------------------------------------------------------------------
# basic properties of T- and T_theta-orthogonality


def suite_basic(rng, s: _Suite, trials: Optional[int]):
    trials = trials or 1000
    p_i = s.prop("basic.i.direction_exists")
    p_ii = s.prop("basic.ii.two_directions_force_t")
    p_ii_conv = s.prop("basic.ii.t_gives_two_directions")
    p_iii = s.prop("basic.iii.t_implies_theta")
    p_iv = s.prop("basic.iv.phase_identity")
    p_v = s.prop("basic.v.right_additive")
    p_vi = s.prop("basic.vi.left_additive")
    p_bil = s.prop("basic.bilinearity")
    for k in range(trials):
        n, fld = _instance(rng, k)
        T = random_pairing(rng, n, fld)
        x, y, z = (random_vector(rng, n, fld) for _ in range(3))
        inputs = {"M": T.M, "x": x, "y": y}

        th = theta_direction(T, x, y)
        v = abs(pair_theta(T, th, x, y)) / (1 + T.norm * np.linalg.norm(x) * np.linalg.norm(y))
        p_i.check(v <= BASIC_TOL, v, {**inputs, "theta": th.theta})

        # (ii) pair != 0: zero in direction th, so any phi with phi - th not in {0, pi} is nonzero
        offset = rng.uniform(0.1, math.pi - 0.1) * rng.choice([-1.0, 1.0])
        phi = th.theta + offset
        w = abs(pair_theta(T, phi, x, y)) / (1 + T.norm * np.linalg.norm(x) * np.linalg.norm(y))
        both_zero = v <= BASIC_TOL and w <= BASIC_TOL
        p_ii.check(not both_zero, None, {**inputs, "theta": th.theta, "phi": phi})
        # ... and pair == 0 gives zero in every direction
        yk = _kernel_combo(rng, T, x, fld)
        for theta in rng.uniform(0, 2 * math.pi, size=3):
            g = abs(pair_theta(T, theta, x, yk)) / (1 + T.norm * np.linalg.norm(x) * np.linalg.norm(yk))
            p_iii.check(g <= BASIC_TOL, g, {"M": T.M, "x": x, "y": yk, "theta": theta})
        yk2 = _kernel_combo(rng, T, x, fld)
        vals = [pair_theta(T, t, x, yk2) for t in (0.3, 0.3 + math.pi / 2)]
        g = max(abs(a) for a in vals) / (1 + T.norm * np.linalg.norm(x) * np.linalg.norm(yk2))
        p_ii_conv.check(g <= BASIC_TOL, g, {"M": T.M, "x": x, "y": yk2})

        # (iv) phase identity; real instances only admit phi in {0, pi}
        theta = rng.uniform(0, 2 * math.pi)
        ph = rng.uniform(0, 2 * math.pi) if fld is COMPLEX else math.pi * rng.integers(2)
        e = cmath.exp(1j * ph) if fld is COMPLEX else math.cos(ph)
        a = pair_theta(T, theta, x, e * y)
        b = pair_theta(T, theta - ph, x, y)
        c = pair_theta(T, theta, e * x, y)
        dev = max(abs(a - b), abs(b - c)) / (1 + T.norm * np.linalg.norm(x) * np.linalg.norm(y))
        p_iv.check(dev <= BASIC_TOL, dev, {**inputs, "theta": theta, "phi": ph})

        # (v) right additivity
        y1, y2 = _kernel_combo(rng, T, x, fld), _kernel_combo(rng, T, x, fld)
        g = _scaled(T, x, y1 + y2)
        p_v.check(g <= BASIC_TOL, g, {"M": T.M, "x": x, "y": y1, "z": y2})

        # (vi) left additivity: x1, x2 in the kernel of y -> (Ty, z)
        Tt = T.transpose()
        x1, x2 = _kernel_combo(rng, Tt, z, fld), _kernel_combo(rng, Tt, z, fld)
        g = _scaled(T, x1 + x2, z)
        p_vi.check(g <= BASIC_TOL, g, {"M": T.M, "x": x1, "y": x2, "z": z})

        al, be = random_vector(rng, 2, fld)
        lhs = pair(T, al * x + be * z, y)
        rhs = al * pair(T, x, y) + be * pair(T, z, y)
        lhs2 = pair(T, x, al * y + be * z)
        rhs2 = al * pair(T, x, y) + be * pair(T, x, z)
        scale = 1 + T.norm * (abs(al) + abs(be)) * max(map(np.linalg.norm, (x, y, z))) ** 2
        dev = max(abs(lhs - rhs), abs(lhs2 - rhs2)) / scale
        p_bil.check(dev <= 1e-12, dev, {**inputs, "z": z})


# --------------------------------------------------------------------------
# l_p geometry: duality maps and BJ orthogonality


def suite_space(rng, s: _Suite, trials: Optional[int]):
    trials = trials or 2000
    eq = s.prop("space.bj_oracle_equivalence")
    rt = s.prop("space.duality_round_trip")
    hom = s.prop("space.bj_homogeneity")
    cvx = s.prop("space.bj_convexity")
    cons = s.prop("space.constructive_bj_witness")
    exps = (1.2, 2.0, 4.0)
    dims = (2, 5)
    for k in range(trials):
        p = exps[k % 3]
        n = dims[(k // 3) % 2]
        fld = FIELDS[(k // 6) % 2]
        sp = PNormSpace(n, p, fld)
        x = random_vector(rng, n, fld)
        if k % 2 == 0:
            y = random_vector(rng, n, fld)
        else:
            f = support_functional(sp, x)
            fc = np.conj(f)
            r = random_vector(rng, n, fld)
            y = r - (apply_functional(f, r) / np.vdot(fc, fc)) * fc
        a = is_bj_orthogonal(sp, x, y)
        b = is_bj_orthogonal_smooth(sp, x, y)
        eq.check(a.verdict == b.verdict, None, {"space": [n, p, fld.value], "x": x, "y": y,
                                                 "gap_min": a.gap, "gap_functional": b.gap})
        if k % 4 == 0:
            sc = random_vector(rng, 2, fld)
            c = is_bj_orthogonal(sp, sc[0] * x, sc[1] * y)
            hom.check(c.verdict == a.verdict, None, {"x": x, "y": y, "a": sc[0], "b": sc[1]})

    for k in range(max(1, trials // 10)):
        p = exps[k % 3]
        n = dims[(k // 3) % 2]
        fld = FIELDS[(k // 6) % 2]
        sp = PNormSpace(n, p, fld)
        x = random_vector(rng, n, fld)
        z = inverse_duality(sp, support_functional(sp, x))
        dev = float(np.max(np.abs(z - x / p_norm(sp, x))))
        rt.check(dev <= 1e-10, dev, {"x": x, "p": p})

        y = random_vector(rng, n, fld)
        R = 2 * p_norm(sp, x) / p_norm(sp, y)
        l1, l2 = random_vector(rng, 2, fld) * R / 3
        mid = p_norm(sp, x + (l1 + l2) / 2 * y)
        avg = (p_norm(sp, x + l1 * y) + p_norm(sp, x + l2 * y)) / 2
        cvx.check(mid <= avg + 1e-12, mid - avg, {"x": x, "y": y})

        f = random_vector(rng, n, fld)
        z = inverse_duality(sp, f)
        for bvec in t_perp_basis(PairingOperator(np.diag(f), fld), np.ones(n)):
            r = is_bj_orthogonal(sp, z, bvec)
            cons.check(r.verdict, r.gap, {"f": f, "z": z, "y": bvec, "p": p})


# --------------------------------------------------------------------------
# symmetry points


def _locally_symmetric(rng, n, fld, x):
    """M = S + N with S symmetric and N x = N^T x = 0.

    Then Mx = M^T x, so left symmetry holds at x, while M itself is
    generically not symmetric.
    """
    S = random_matrix(rng, n, fld)
    xx = np.vdot(x, x)
    P = np.eye(n) - np.outer(x, x.conj()) / xx  # P x = 0
    R = np.eye(n) - np.outer(x.conj(), x) / xx  # x^T R = 0
    return S + S.T + R @ random_matrix(rng, n, fld) @ P


def _collinear_isotropic(rng, n, fld, x, S, alpha):
    """M = S + K with K skew and K x = alpha S x; x isotropic for S gives
    M^T x = ((1 - alpha)/(1 + alpha)) M x."""
    w = S @ x
    d = x @ x
    if abs(d) < 1e-6:
        return None
    K = alpha * (np.outer(w, x) - np.outer(x, w)) / d
    return S + K


def suite_symmetry(rng, s: _Suite, trials: Optional[int]):
    trials = trials or 500
    th_i = s.prop("theorem.i.nonisotropic_left_iff_right")
    th_ii = s.prop("theorem.ii.isotropic_left_iff_right_bijective")
    lem = s.prop("lemma.nonisotropic_lambda_one")
    symm = s.prop("prop.symm.scalar_reproduces")
    sound = s.prop("definition.soundness")
    th_sym = s.prop("theorem.symmetric_iff_nonisotropic_left")
    single = s.prop("note.single_witness_insufficient", theorem=False)
    half = s.prop("theorem.halfspace_iff_left")
    corr = s.prop("corollary.real_sign_pattern")

    # (i): nonisotropic x
    for k in range(trials):
        n, fld = _instance(rng, k)
        x = random_vector(rng, n, fld)
        kind = k % 3
        if kind == 0:
            M = random_matrix(rng, n, fld)
        elif kind == 1:
            M = random_matrix(rng, n, fld)
            M = M + M.T
        else:
            M = _locally_symmetric(rng, n, fld, x)
        T = PairingOperator(M, fld)
        if is_isotropic(T, x).verdict:
            continue
        v = symmetry_verdict(T, x)
        th_i.check(v.left == v.right, None, {"M": M, "x": x, "kind": kind})
        if v.left:
            dev = float(np.linalg.norm(M.T @ x - M @ x) / np.linalg.norm(M @ x))
            lem.check(dev <= 1e-8, dev, {"M": M, "x": x})
        _soundness(rng, T, x, v, fld, sound)
        if v.scalar is not None:
            lam = symmetry_scalar(T, x)
            Y = np.array([random_vector(rng, n, fld) for _ in range(100)])
            a, b = Y @ (M @ x), Y @ (M.T @ x)
            worst = float(np.max(np.abs(a - lam * b) / np.abs(a)))
            symm.check(worst <= 1e-10, worst, {"M": M, "x": x, "lambda": lam})

    # (ii): isotropic x, invertible M
    done = 0
    k = 0
    while done < trials and k < 20 * trials:
        n, fld = _instance(rng, k)
        k += 1
        kind = done % 3
        if kind == 0:
            M = random_matrix(rng, n, fld)
        else:
            S = random_matrix(rng, n, fld)
            S = S + S.T
            M = S
        T = PairingOperator(M, fld)
        x = isotropic_vector(rng, T)
        if x is None:
            continue
        if kind == 2:
            alpha = rng.uniform(0.2, 0.8)
            M = _collinear_isotropic(rng, n, fld, x, S, alpha)
            if M is None:
                continue
            T = PairingOperator(M, fld)
        if not T.bijective or not is_isotropic(T, x).verdict:
            continue
        v = symmetry_verdict(T, x)
        th_ii.check(v.left == v.right, None, {"M": M, "x": x, "kind": kind})
        _soundness(rng, T, x, v, fld, sound)
        if v.scalar is not None:
            lam = symmetry_scalar(T, x)
            y = random_vector(rng, n, fld)
            a, b = pair(T, x, y), pair(T, y, x)
            dev = abs(a - lam * b) / max(abs(a), 1e-300)
            symm.check(dev <= 1e-10, dev, {"M": M, "x": x, "lambda": lam})
        done += 1

    # symmetric T <=> a nonisotropic vector exists and left symmetry holds at nonisotropic points
    n_sym = max(1, (2 * trials) // 5)
    for k in range(n_sym):
        n, fld = _instance(rng, k)
        kind = k % 4
        M = random_matrix(rng, n, fld)
        if kind == 1:
            M = M + M.T
        elif kind == 2:
            M = M - M.T
        elif kind == 3:
            M = _locally_symmetric(rng, n, fld, np.eye(n, dtype=fld.dtype)[0])
        T = PairingOperator(M, fld)
        lhs = is_operator_symmetric(T)
        w = find_nonisotropic(T)
        if w is None:
            rhs = False
            at_witness = False
        else:
            at_witness = symmetry_verdict(T, w).left
            probes = [w] + [random_vector(rng, n, fld) for _ in range(n)]
            rhs = all(
                symmetry_verdict(T, z).left
                for z in probes
                if not is_isotropic(T, z).verdict
            )
        th_sym.check(lhs == rhs, None, {"M": M, "kind": kind})
        single.check(lhs == at_witness, None, {"M": M, "kind": kind})

    # sign-class reformulation of left symmetry
    for k in range(max(1, trials // 5)):
        n, fld = _instance(rng, k)
        x = random_vector(rng, n, fld)
        kind = k % 3
        if kind == 0:
            M = random_matrix(rng, n, fld)
        elif kind == 1:
            M = random_matrix(rng, n, fld)
            M = M - M.T
        else:
            M = _locally_symmetric(rng, n, fld, x)
            if fld is COMPLEX:
                M = M * cmath.exp(1j * rng.uniform(0, 2 * math.pi))
        T = PairingOperator(M, fld)
        v = symmetry_verdict(T, x)
        rep = halfspace_symmetry_check(T, x, samples=100, seed=int(rng.integers(2**31)))
        half.check(rep.holds == v.left, None, {"M": M, "x": x, "phi0": rep.phi0})
        if fld is REAL and v.left and v.scalar is not None:
            lam = v.scalar.real
            ok = True
            for _ in range(20):
                y = rng.standard_normal(n)
                a, b = pair(T, x, y), pair(T, y, x)
                if abs(a) > 1e-9 and np.sign(a) * np.sign(b) != np.sign(lam):
                    ok = False
            corr.check(ok, None, {"M": M, "x": x, "lambda": lam})


def _soundness(rng, T, x, v, fld, rec: PropertyRecord):
    """Left verdict vs the definition, on y drawn from ker(Tx)."""
    try:
        basis = t_perp_basis(T, x)
    except ValueError:
        return
    y = random_vector(rng, basis.shape[0], fld) @ basis
    g = _scaled(T, y, x)
    if v.left:
        rec.check(g <= 1e-8, g, {"M": T.M, "x": x, "y": y})
    else:
        worst = max(_scaled(T, b, x) for b in basis)
        rec.check(worst > 1e-8, -worst, {"M": T.M, "x": x})


# --------------------------------------------------------------------------
# directional symmetry


def suite_direction(rng, s: _Suite, trials: Optional[int]):
    trials = trials or 500
    imp = s.prop("theorem.direction.theta_left_implies_left")
    conv = s.prop("example.direction.converse_fails")
    real_lam = s.prop("remark.real_lambda_all_directions")
    positives = 0
    for k in range(trials):
        n = DIMS[k % 3]
        x = random_vector(rng, n, COMPLEX)
        kind = k % 4
        M = random_matrix(rng, n, COMPLEX)
        if kind == 1:
            M = M + M.T
        elif kind == 2:
            M = M - M.T
        elif kind == 3:
            M = _locally_symmetric(rng, n, COMPLEX, x) * cmath.exp(1j * rng.uniform(0, 2 * math.pi))
        T = PairingOperator(M, COMPLEX)
        theta = rng.uniform(0, 2 * math.pi)
        tl = is_theta_left_symmetric_at(T, theta, x)
        left = symmetry_verdict(T, x).left
        positives += tl
        imp.check((not tl) or left, None, {"M": M, "x": x, "theta": theta})
        v = symmetry_verdict(T, x)
        if v.left and v.scalar is not None and abs(v.scalar.imag) <= 1e-9 * abs(v.scalar):
            ok = all(is_theta_left_symmetric_at(T, t, x) for t in rng.uniform(0, 2 * math.pi, 5))
            real_lam.check(ok, None, {"M": M, "x": x})
    log.info("direction suite: %d theta-left-symmetric instances", positives)

    T = fixtures.direction_example_operator()
    e1 = np.array([1.0, 0.0])
    conv.check(
        symmetry_verdict(T, e1).left and not is_theta_left_symmetric_at(T, math.pi / 2, e1),
        None,
        {"fixture": "direction-example"},
    )


# --------------------------------------------------------------------------
# orthogonality preservers


def suite_preserver(rng, s: _Suite, trials: Optional[int]):
    trials = trials or 100
    pos = s.prop("theorem.preserver.isometry_multiples_preserve")
    neg = s.prop("theorem.preserver.non_preservers_detected")
    func = s.prop("adjoint_conjugate.functoriality")
    for k in range(trials):
        n, fld = _instance(rng, k)
        T, R = random_symmetric_pairing(rng, n, fld)
        A = random_t_isometry(rng, T, R)
        iso_ok = is_T_isometry(T, A, 1e-8)
        c = complex(*rng.uniform(0.5, 2.0, 2)) if fld is COMPLEX else rng.uniform(0.5, 2.0) * rng.choice([-1, 1])
        A = c * A
        beta = preserver_scalar(T, A, 1e-8)
        res = preserves_T_orthogonality_sampled(T, A, samples=500, seed=int(rng.integers(2**31)))
        ok = iso_ok and beta is not None and res.holds
        dev = abs(beta * c * c - 1) if beta is not None else math.inf
        pos.check(ok and dev <= 1e-8, dev, {"M": T.M, "A": A, "c": c})

        Tr = random_pairing(rng, n, fld)
        B = random_matrix(rng, n, fld)
        beta = preserver_scalar(Tr, B, 1e-8)
        res = preserves_T_orthogonality_sampled(Tr, B, samples=500, seed=int(rng.integers(2**31)))
        neg.check(beta is None and not res.holds, None, {"M": Tr.M, "A": B})

        C = random_matrix(rng, n, fld)
        lhs = adjoint_conjugate(Tr, B @ C).M
        rhs = adjoint_conjugate(adjoint_conjugate(Tr, B), C).M
        dev = float(np.linalg.norm(lhs - rhs) / max(np.linalg.norm(lhs), 1e-300))
        func.check(dev <= 1e-12, dev, {"M": Tr.M, "A": B, "B": C})


# --------------------------------------------------------------------------
# Hilbert-space characterizations


def suite_hilbert(rng, s: _Suite, trials: Optional[int]):
    samples = trials or 200
    seed = int(s.report.seed)
    accept = s.prop("hilbert.fit_euclidean_accepts")
    reject = s.prop("hilbert.fit_non_euclidean_rejects")
    rev = s.prop("hilbert.fit_reverse_inclusion")
    for sp in (PNormSpace(2, 2), PNormSpace(3, 2)):
        r = hilbert_fit(sp, samples=samples, seed=seed)
        accept.check(r.residual <= FIT_ACCEPT, r.residual, {"n": sp.n, "p": sp.p})
        rev.check(r.reverse_gap <= 1e-8, r.reverse_gap, {"n": sp.n, "p": sp.p})
    for sp in (PNormSpace(2, 1.5), PNormSpace(2, 3), PNormSpace(2, 2, COMPLEX)):
        r = hilbert_fit(sp, samples=samples, seed=seed)
        reject.check(r.residual >= FIT_REJECT, -r.residual,
                     {"n": sp.n, "p": sp.p, "field": sp.field.value, "residual": r.residual})

    rot0 = s.prop("lemma.rotation_p2")
    rot1 = s.prop("lemma.rotation_other_p")
    gap, wit = rotation_bj_deviation(2.0, samples, seed)
    rot0.check(gap <= ROTATION_ZERO, gap, {"p": 2, "witness": wit})
    for p in (1.5, 3.0):
        gap, wit = rotation_bj_deviation(p, samples, seed)
        rot1.check(gap > ROTATION_WITNESS, -gap, {"p": p, "witness": wit})

    two = s.prop("theorem.two_dim.euclidean_passes")
    two_neg = s.prop("theorem.two_dim.l4_fails")
    e1, e2 = np.array([1.0, 0.0]), np.array([0.0, 1.0])
    I = PairingOperator(np.eye(2))
    rep = two_dim_hilbert_conditions(PNormSpace(2, 2), I, e1, e2, samples, seed, 1e-10)
    two.check(rep.all_pass, max(rep.violations.values()), rep.violations)
    rep = two_dim_hilbert_conditions(PNormSpace(2, 4), I, e1, e2, samples, seed, 1e-10)
    two_neg.check(not rep.passed["norm_identity"], -rep.norm_identity,
                  {"witness": rep.norm_identity_witness})

    struct = s.prop("theorem.lp2.structure")
    a = rng.uniform(0.5, 2.0)
    st = lp_pairing_structure_check(PairingOperator(a * np.eye(2)))
    struct.check(st.diagonal and st.equal_diagonal, st.diagonal_spread)
    st = lp_pairing_structure_check(PairingOperator(np.diag([1.0, 2.0])))
    struct.check(st.diagonal and not st.equal_diagonal, None)
    st = lp_pairing_structure_check(fixtures.first_c2_operator())
    struct.check(not st.diagonal, None)


SUITES: dict[str, Callable] = {
    "basic": suite_basic,
    "space": suite_space,
    "symmetry": suite_symmetry,
    "direction": suite_direction,
    "preserver": suite_preserver,
    "hilbert": suite_hilbert,
}


def run_suite(name: str, seed: int = 42, trials: Optional[int] = None) -> SuiteReport:
    """Run one named suite, or every suite for ``name == "all"``."""
    if name != "all" and name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES) + ['all']}")
    names = list(SUITES) if name == "all" else [name]
    report = SuiteReport(name, seed)
    start = time.perf_counter()
    for nm in names:
        rng = np.random.default_rng(seed)
        SUITES[nm](rng, _Suite(report), trials)
    report.wall_time = time.perf_counter() - start
    log.info("suite %s finished in %.2fs", name, report.wall_time)
    return report
