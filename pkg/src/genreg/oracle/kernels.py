"""Floating-point kernels for the numeric oracle.

Two interchangeable implementations of each kernel: numba ``@njit`` loops and
vectorised numpy.  The numba path is used when numba imports and the
environment variable ``GENREG_DISABLE_JIT`` is unset or ``0``.  Both paths
return the same values up to rounding.
"""

from __future__ import annotations

import os

import numpy as np

_DISABLE = os.environ.get("GENREG_DISABLE_JIT", "0") not in ("", "0", "false", "False")

try:
    if _DISABLE:
        raise ImportError("disabled by GENREG_DISABLE_JIT")
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised with the env flag
    njit = None
    HAVE_NUMBA = False


def initial_guesses(coeffs: np.ndarray) -> np.ndarray:
    """Points on a circle of the geometric-mean root radius, rotated off the axes."""
    n = len(coeffs) - 1
    r = abs(coeffs[-1] / coeffs[0]) ** (1.0 / n) if coeffs[-1] != 0 else 1.0
    nz = np.nonzero(coeffs[1:])[0]
    if r == 0.0 or not np.isfinite(r):
        r = 1.0
    if len(nz):
        # Fujiwara-style bound keeps the circle from being absurdly small
        bound = max(abs(coeffs[k + 1] / coeffs[0]) ** (1.0 / (k + 1)) for k in nz)
        r = max(r, 0.5 * bound)
    ang = 2.0 * np.pi * np.arange(n) / n + 0.4
    return r * np.exp(1j * ang)


# --- numpy implementations --------------------------------------------------


def aberth_numpy(coeffs: np.ndarray, z0: np.ndarray, maxiter: int = 500, tol: float = 1e-14):
    coeffs = np.asarray(coeffs, dtype=np.complex128)
    dcoeffs = np.polyder(coeffs)
    z = np.array(z0, dtype=np.complex128)
    n = z.size
    it = 0
    for it in range(1, maxiter + 1):
        p = np.polyval(coeffs, z)
        dp = np.polyval(dcoeffs, z)
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        inv = 1.0 / diff
        np.fill_diagonal(inv, 0.0)
        s = inv.sum(axis=1)
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = np.where(p == 0, 0.0, p / dp)
            w = np.where(p == 0, 0.0, ratio / (1.0 - ratio * s))
        w[~np.isfinite(w)] = 0.0
        z = z - w
        scale = np.maximum(1.0, np.abs(z))
        if n == 0 or np.max(np.abs(w) / scale) < tol:
            break
    return z, it


def horner_numpy(coeffs: np.ndarray, z: np.ndarray) -> np.ndarray:
    return np.polyval(np.asarray(coeffs, dtype=np.complex128), np.asarray(z, dtype=np.complex128))


def eval_terms_numpy(coeffs: np.ndarray, exps: np.ndarray, point: np.ndarray) -> complex:
    """Sum of c_k * prod(point ** exps[k]) and the matching sum of absolute term values."""
    if len(coeffs) == 0:
        return 0j, 0.0
    mons = np.prod(np.power(point[None, :], exps), axis=1)
    vals = coeffs * mons
    return complex(vals.sum()), float(np.abs(vals).sum())


# --- numba implementations ------------------------------------------------------

if HAVE_NUMBA:

    @njit(cache=True)
    def aberth_jit(coeffs, z0, maxiter, tol):
        n = z0.size
        m = coeffs.size
        z = z0.copy()
        it = 0
        for it in range(1, maxiter + 1):
            maxrel = 0.0
            for i in range(n):
                p = coeffs[0]
                dp = 0j
                zi = z[i]
                for k in range(1, m):
                    dp = dp * zi + p
                    p = p * zi + coeffs[k]
                if p == 0:
                    continue
                s = 0j
                for j in range(n):
                    if j != i:
                        s += 1.0 / (zi - z[j])
                ratio = p / dp
                w = ratio / (1.0 - ratio * s)
                if not (np.isfinite(w.real) and np.isfinite(w.imag)):
                    continue
                z[i] = zi - w
                rel = abs(w) / max(1.0, abs(z[i]))
                if rel > maxrel:
                    maxrel = rel
            if maxrel < tol:
                break
        return z, it

    @njit(cache=True)
    def horner_jit(coeffs, z):
        out = np.empty(z.size, dtype=np.complex128)
        for i in range(z.size):
            acc = 0j
            for k in range(coeffs.size):
                acc = acc * z[i] + coeffs[k]
            out[i] = acc
        return out

    @njit(cache=True)
    def _eval_terms_jit(coeffs, exps, point):
        total = 0j
        mag = 0.0
        for k in range(coeffs.size):
            t = coeffs[k]
            for v in range(point.size):
                e = exps[k, v]
                if e:
                    t *= point[v] ** e
            total += t
            mag += abs(t)
        return total, mag

    def eval_terms_jit(coeffs, exps, point):
        if len(coeffs) == 0:
            return 0j, 0.0
        return _eval_terms_jit(coeffs, exps, point)


def aberth(coeffs, z0, maxiter: int = 500, tol: float = 1e-14, use_jit: bool | None = None):
    c = np.ascontiguousarray(coeffs, dtype=np.complex128)
    z = np.ascontiguousarray(z0, dtype=np.complex128)
    if use_jit is None:
        use_jit = HAVE_NUMBA
    if use_jit:
        return aberth_jit(c, z, maxiter, tol)
    return aberth_numpy(c, z, maxiter, tol)


def horner(coeffs, z, use_jit: bool | None = None):
    c = np.ascontiguousarray(coeffs, dtype=np.complex128)
    zz = np.atleast_1d(np.ascontiguousarray(z, dtype=np.complex128))
    if use_jit is None:
        use_jit = HAVE_NUMBA
    if use_jit:
        return horner_jit(c, zz)
    return horner_numpy(c, zz)


def eval_terms(coeffs, exps, point, use_jit: bool | None = None):
    if use_jit is None:
        use_jit = HAVE_NUMBA
    pt = np.ascontiguousarray(point, dtype=np.complex128)
    if use_jit:
        return eval_terms_jit(coeffs, exps, pt)
    return eval_terms_numpy(coeffs, exps, pt)
