"""Exact and floating-point spectral machinery.

Cospectrality is always decided through exact integer characteristic
polynomials; floating spectra are used only for threshold comparisons
and are produced by a cyclic Jacobi solver on the dense symmetric
adjacency matrix.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import BudgetExceededError
from .graphs import Graph

CHARPOLY_ORDER_BUDGET = 2000
JACOBI_OFF_NORM = 1e-12
GROUP_TOL = 1e-6


# ---------------------------------------------------------------------------
# exact characteristic polynomial
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CharPoly:
    """det(xI - A) as exact integer coefficients, leading first."""

    coefficients: tuple

    @property
    def degree(self):
        return len(self.coefficients) - 1

    def evaluate(self, x):
        """Exact evaluation at an integer (or Fraction) point."""
        acc = 0
        for c in self.coefficients:
            acc = acc * x + c
        return acc

    def divide_linear(self, root):
        """Synthetic division by (x - root): (quotient, remainder)."""
        quot = []
        acc = 0
        for c in self.coefficients:
            acc = acc * root + c
            quot.append(acc)
        rem = quot.pop()
        return CharPoly(tuple(quot)), rem

    def root_multiplicity(self, root):
        """Exact multiplicity of an integer root."""
        mult = 0
        poly = self
        while poly.degree >= 1:
            quot, rem = poly.divide_linear(root)
            if rem != 0:
                break
            mult += 1
            poly = quot
        return mult

    def to_text(self):
        return ",".join(str(c) for c in self.coefficients)

    @classmethod
    def from_text(cls, text):
        return cls(tuple(int(part) for part in text.split(",")))


# All Faddeev-LeVerrier intermediates are bounded by 3^n 2^n for a graph
# with maximum degree 3 (and by n^n 2^n in general via Hadamard), so int64
# is safe up to this order and the corpus scan can run on numpy.
_CHARPOLY_INT64_ORDER = 20


def _char_poly_int64(g):
    a = g.adjacency_matrix()
    n = g.n
    m = np.eye(n, dtype=np.int64)
    coeffs = [1]
    for k in range(1, n + 1):
        prod = a @ m
        trace = int(np.trace(prod))
        if trace % k:
            raise ArithmeticError("Faddeev-LeVerrier division not exact")
        ck = -(trace // k)
        coeffs.append(ck)
        if k < n:
            np.fill_diagonal(prod, prod.diagonal() + ck)
            m = prod
    return CharPoly(tuple(coeffs))


def char_poly(g):
    """Exact characteristic polynomial via the Faddeev-LeVerrier recurrence.

    Every division in the recurrence is exact over the integers.  Small
    orders run on int64 (the intermediates provably fit); larger orders
    use arbitrary-precision rows, with the matrix product specialised to
    the 0/1 adjacency structure (row i of A*M is the sum of M's rows over
    i's neighbours).
    """
    n = g.n
    if n > CHARPOLY_ORDER_BUDGET:
        raise BudgetExceededError(
            f"char_poly supports order <= {CHARPOLY_ORDER_BUDGET}, got {n}")
    if n == 0:
        return CharPoly((1,))
    if n <= _CHARPOLY_INT64_ORDER and max(g.degrees(), default=0) <= 3:
        return _char_poly_int64(g)
    adj = g._adj
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    coeffs = [1]
    for k in range(1, n + 1):
        prod = []
        for i in range(n):
            nb = adj[i]
            if not nb:
                prod.append([0] * n)
                continue
            acc = list(m[nb[0]])
            for w in nb[1:]:
                row = m[w]
                acc = [x + y for x, y in zip(acc, row)]
            prod.append(acc)
        trace = sum(prod[i][i] for i in range(n))
        if trace % k:
            raise ArithmeticError("Faddeev-LeVerrier division not exact")
        ck = -(trace // k)
        coeffs.append(ck)
        if k < n:
            for i in range(n):
                prod[i][i] += ck
            m = prod
    return CharPoly(tuple(coeffs))


def are_cospectral(a, b):
    """Exact cospectrality: integer equality of characteristic polynomials."""
    if a.n != b.n:
        return False
    return char_poly(a) == char_poly(b)


def _poly_mul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def truncation_char_poly(p):
    """Exact characteristic polynomial of the truncation, from the original's.

    For cubic G of even order n, substituting the plane-reduction
    quadratic gives p_T(x) = x^(n/2) (x+2)^(n/2) p_G(x^2 - x - 3).
    """
    n = p.degree
    if n % 2:
        raise ValueError("order must be even")
    quad = [1, -1, -3]  # x^2 - x - 3
    comp = [p.coefficients[0]]
    for c in p.coefficients[1:]:
        comp = _poly_mul(comp, quad)
        comp[-1] += c
    prefix = [1]
    for _ in range(n // 2):
        prefix = _poly_mul(prefix, [1, 2, 0])  # x(x+2)
    return CharPoly(tuple(_poly_mul(prefix, comp)))


# ---------------------------------------------------------------------------
# floating spectra
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Spectrum:
    """All-real adjacency eigenvalues, descending, with multiplicity."""

    values: tuple

    @property
    def order(self):
        return len(self.values)

    def lambda_(self, i):
        """1-based i-th largest eigenvalue."""
        return self.values[i - 1]

    def groups(self, tol=GROUP_TOL):
        """Multiplicity grouping at tolerance `tol`: ((value, count), ...).

        The representative value is the mean of the group.
        """
        groups = []
        bucket = []
        for v in self.values:
            if bucket and bucket[0] - v > tol:
                groups.append((sum(bucket) / len(bucket), len(bucket)))
                bucket = []
            bucket.append(v)
        if bucket:
            groups.append((sum(bucket) / len(bucket), len(bucket)))
        return tuple(groups)

    def to_json(self):
        return [
            {"value": float(f"{value:.12g}"), "multiplicity": count}
            for value, count in self.groups()
        ]


def jacobi_eigenvalues(matrix, vectors=False, off_norm=JACOBI_OFF_NORM,
                       max_sweeps=100):
    """Cyclic Jacobi on a dense symmetric matrix.

    Sweeps Givens rotations over every off-diagonal plane until the
    off-diagonal Frobenius norm drops below `off_norm`.  Returns
    (eigenvalues descending, eigenvector matrix or None); eigenvector
    columns follow the descending value order.
    """
    a = np.array(matrix, dtype=np.float64)
    n = a.shape[0]
    if n == 0:
        return np.array([]), (np.zeros((0, 0)) if vectors else None)
    v = np.eye(n) if vectors else None
    sq = a * a
    np.fill_diagonal(sq, 0.0)
    for _ in range(max_sweeps):
        off = math.sqrt(sq.sum())
        if off < off_norm:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                diff = a[q, q] - a[p, p]
                if abs(apq) < 1e-300 * abs(diff):
                    a[p, q] = 0.0
                    a[q, p] = 0.0
                    continue
                theta = diff / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 1.0 / (2.0 * theta)
                else:
                    t = math.copysign(1.0, theta) / (
                        abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                app, aqq = a[p, p], a[q, q]
                row_p = a[p].copy()
                row_q = a[q].copy()
                a[p] = c * row_p - s * row_q
                a[q] = s * row_p + c * row_q
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
                if vectors:
                    vp = v[:, p].copy()
                    vq = v[:, q].copy()
                    v[:, p] = c * vp - s * vq
                    v[:, q] = s * vp + c * vq
        sq = a * a
        np.fill_diagonal(sq, 0.0)
    else:
        raise ArithmeticError("Jacobi sweeps did not converge")
    order = np.argsort(-np.diag(a), kind="stable")
    values = np.diag(a)[order]
    if vectors:
        return values, v[:, order]
    return values, None


def eigenvalues(g):
    """Adjacency spectrum of g, descending."""
    if g.n == 0:
        return Spectrum(())
    values, _ = jacobi_eigenvalues(g.adjacency_matrix())
    return Spectrum(tuple(float(x) for x in values))


def eigen_system(g):
    """(Spectrum, eigenvector columns) for residual checking."""
    values, vecs = jacobi_eigenvalues(g.adjacency_matrix(), vectors=True)
    return Spectrum(tuple(float(x) for x in values)), vecs


# ---------------------------------------------------------------------------
# Rayleigh quotients
# ---------------------------------------------------------------------------

def rayleigh(g, vector):
    """Exact Rayleigh quotient (v^T A v) / (v^T v) over the rationals."""
    if len(vector) != g.n:
        raise ValueError(
            f"vector length {len(vector)} != graph order {g.n}")
    vec = [Fraction(x) for x in vector]
    den = sum(x * x for x in vec)
    if den == 0:
        raise ValueError("zero vector")
    num = sum(2 * vec[u] * vec[v] for u, v in g.edges)
    return Fraction(num, den)


def rayleigh_formula_c2(n2):
    """Closed-form quotient 3 - 6/(9 n2 - 5) for a component that is cubic
    except for a single degree-2 vertex carrying entry 2."""
    if n2 < 11 or n2 % 2 == 0:
        raise ValueError("n2 must be an odd integer >= 11")
    return Fraction(27 * n2 - 21, 9 * n2 - 5)


def rayleigh_formula_c1(n1, adjacent):
    """Closed-form quotient for a component that is cubic except for two
    degree-2 vertices carrying entry 2: (27 n1 - 40)/(9 n1 - 10) when the
    two special vertices are adjacent, (27 n1 - 42)/(9 n1 - 10) otherwise."""
    if n1 < 26:
        raise ValueError("n1 must be an integer >= 26")
    num = 27 * n1 - 40 if adjacent else 27 * n1 - 42
    return Fraction(num, 9 * n1 - 10)


# ---------------------------------------------------------------------------
# truncation spectrum map + spectral shape of truncations
# ---------------------------------------------------------------------------

def truncation_spectrum_map(spectrum, n):
    """Spectrum of the full truncation of a cubic graph, from the original's.

    Each eigenvalue maps to the pair 1/2 +- sqrt(13 + 4*lambda)/2, and the
    values -2 and 0 are appended with multiplicity n/2 each.
    """
    if spectrum.order != n:
        raise ValueError(f"spectrum has {spectrum.order} entries, expected {n}")
    if n % 2:
        raise ValueError("cubic graphs have even order")
    if abs(spectrum.values[0] - 3.0) > 1e-6:
        raise ValueError(
            f"not a cubic spectrum: largest eigenvalue {spectrum.values[0]!r}")
    out = []
    for lam in spectrum.values:
        root = math.sqrt(13.0 + 4.0 * lam)
        out.append(0.5 + 0.5 * root)
        out.append(0.5 - 0.5 * root)
    out.extend([-2.0] * (n // 2))
    out.extend([0.0] * (n // 2))
    out.sort(reverse=True)
    return Spectrum(tuple(out))


def truncated_shape_check(g):
    """Spectral-moment test for 'is the truncation of some cubic graph'.

    All in exact integer arithmetic: order divisible by 3, closed 2-walks
    = 3n (with the 4-walk count this forces 3-regularity), closed 3-walks
    = 2n (exactly n/3 triangles), closed 4-walks = 15n (no 4-cycles).
    """
    from .graphs import closed_walks

    n = g.n
    if n % 3:
        return False
    return (closed_walks(g, 2) == 3 * n
            and closed_walks(g, 3) == 2 * n
            and closed_walks(g, 4) == 15 * n)
