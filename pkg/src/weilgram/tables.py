"""Vectorized bulk arithmetic over a whole finite field at once.

Elements of F_{p^K} are addressed by their enumeration index (little-endian
base-p digit vector, matching finite_field.enumerate_elements).  A FieldTable
holds the digit matrix and the reduction rows of the modulus and implements
elementwise field operations on whole numpy index arrays.  This is what makes
brute-force point counting over fields with a million elements take seconds
instead of hours; results are bit-identical to the scalar FieldElement
arithmetic, which the test suite checks on small fields.

All intermediate products fit comfortably in int64: digit convolutions are
bounded by K*(p-1)^2 and the reduction folds by a further factor K*(p-1).
Operations are chunked so peak temporary memory stays a few megabytes even
for the largest fields used.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from . import fppoly
from .finite_field import FieldSpec

CHUNK = 1 << 16


class FieldTable:
    """Index-space arithmetic tables for one FieldSpec."""

    def __init__(self, spec: FieldSpec):
        self.spec = spec
        self.p = spec.p
        self.K = spec.k
        self.q = spec.q
        idx = np.arange(self.q, dtype=np.int64)
        digits = np.empty((self.q, self.K), dtype=np.int16)
        for i in range(self.K):
            digits[:, i] = (idx // self.p**i) % self.p
        self.digits = digits
        # rows m-K of t^m mod modulus, for m = K .. 2K-2
        rows = []
        power = fppoly.mod((0,) * self.K + (1,), spec.modulus, self.p)
        for _ in range(self.K - 1):
            rows.append(power + (0,) * (self.K - len(power)))
            power = fppoly.mod((0,) + power, spec.modulus, self.p)
        self.reduction = np.array(rows, dtype=np.int64).reshape(self.K - 1, self.K)
        self._pvec = np.array([self.p**i for i in range(self.K)], dtype=np.int64)
        self._sqrt_count = None
        self._pow_cache = {1: idx}

    def _to_index(self, dig: np.ndarray) -> np.ndarray:
        return (dig % self.p) @ self._pvec

    def mul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Elementwise product of two index arrays (broadcast to equal shape)."""
        a, b = np.broadcast_arrays(np.asarray(a, dtype=np.int64),
                                   np.asarray(b, dtype=np.int64))
        out = np.empty(a.shape, dtype=np.int64)
        K = self.K
        for lo in range(0, a.size, CHUNK):
            hi = min(lo + CHUNK, a.size)
            A = self.digits[a[lo:hi]].astype(np.int64)
            B = self.digits[b[lo:hi]].astype(np.int64)
            conv = np.zeros((hi - lo, 2 * K - 1), dtype=np.int64)
            for i in range(K):
                conv[:, i : i + K] += A[:, i : i + 1] * B
            for m in range(2 * K - 2, K - 1, -1):
                conv[:, :K] += conv[:, m : m + 1] * self.reduction[m - K]
            out[lo:hi] = self._to_index(conv[:, :K])
        return out

    def add(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        a, b = np.broadcast_arrays(np.asarray(a, dtype=np.int64),
                                   np.asarray(b, dtype=np.int64))
        out = np.empty(a.shape, dtype=np.int64)
        for lo in range(0, a.size, CHUNK):
            hi = min(lo + CHUNK, a.size)
            out[lo:hi] = self._to_index(
                self.digits[a[lo:hi]].astype(np.int64) + self.digits[b[lo:hi]]
            )
        return out

    def scale(self, a: np.ndarray, c: int) -> np.ndarray:
        """Multiply by a prime-field constant."""
        c %= self.p
        if c == 1:
            return np.asarray(a, dtype=np.int64)
        a = np.asarray(a, dtype=np.int64)
        out = np.empty(a.shape, dtype=np.int64)
        for lo in range(0, a.size, CHUNK):
            hi = min(lo + CHUNK, a.size)
            out[lo:hi] = self._to_index(self.digits[a[lo:hi]].astype(np.int64) * c)
        return out

    def add_scalar(self, a: np.ndarray, c: int) -> np.ndarray:
        """Add a prime-field constant: only the degree-0 digit moves."""
        c %= self.p
        if c == 0:
            return np.asarray(a, dtype=np.int64)
        a = np.asarray(a, dtype=np.int64)
        d0 = a % self.p
        return a - d0 + (d0 + c) % self.p

    def eval_poly(self, f, at: np.ndarray = None) -> np.ndarray:
        """Horner evaluation of a prime-field polynomial at index array `at`
        (default: every field element)."""
        x = np.arange(self.q, dtype=np.int64) if at is None else np.asarray(at, dtype=np.int64)
        if not f:
            return np.zeros(x.shape, dtype=np.int64)
        val = np.full(x.shape, f[-1] % self.p, dtype=np.int64)
        for c in reversed(f[:-1]):
            val = self.add_scalar(self.mul(val, x), c)
        return val

    def eval_zpoly(self, coeff_indices, at: np.ndarray) -> np.ndarray:
        """Horner evaluation where coefficients are arbitrary field elements
        given by index (ascending degree)."""
        at = np.asarray(at, dtype=np.int64)
        if not coeff_indices:
            return np.zeros(at.shape, dtype=np.int64)
        val = np.full(at.shape, coeff_indices[-1], dtype=np.int64)
        for c in reversed(coeff_indices[:-1]):
            val = self.add(self.mul(val, at), np.full(at.shape, c, dtype=np.int64))
        return val

    def powers(self, n: int) -> np.ndarray:
        """Index array of e^n over all elements e (n >= 0); e^0 = 1 for all e."""
        if n == 0:
            return np.full(self.q, 1, dtype=np.int64)
        if n not in self._pow_cache:
            self._pow_cache[n] = self.mul(self.powers(n - 1), np.arange(self.q, dtype=np.int64))
        return self._pow_cache[n]

    def sqrt_count(self) -> np.ndarray:
        """Table s with s[v] = #{y in the field : y^2 = v}, built once."""
        if self._sqrt_count is None:
            all_idx = np.arange(self.q, dtype=np.int64)
            squares = self.mul(all_idx, all_idx)
            self._sqrt_count = np.bincount(squares, minlength=self.q)
        return self._sqrt_count


@lru_cache(maxsize=32)
def get_table(spec: FieldSpec) -> FieldTable:
    return FieldTable(spec)
