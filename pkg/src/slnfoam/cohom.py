"""Schur calculus in at most three variables and the Frobenius algebras of facets.

Dots on a k-type foam facet multiply inside the cohomology of the
Grassmannian of k-planes in C^N: a free Z-module on the Schur basis
``pi_lambda`` indexed by partitions inside a k x (N-k) box, with

* product: Pieri rule in two variables, Schur expansion in three,
  truncated to the box (``pi_lambda = 0`` once ``lambda_1 > N - k``),
* trace ``eps(pi_box) = (-1)^floor(k/2)`` and zero elsewhere,
* dual basis ``dual(lambda) = (-1)^floor(k/2) * pi_(box complement)``.

The theta tensors evaluate dotted theta foams; they are the traces of the
partial flag varieties Fl(1,2;N) and Fl(2,3;N) written against the Schur
basis.  The universal sl(3) facet algebra lives over Z[a,b,c].
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

from .qring import ABCScalar

Partition = tuple[int, ...]


def normalize_partition(p, k: int) -> Partition:
    """Pad/validate a weakly decreasing tuple to length k."""
    t = tuple(p) + (0,) * (k - len(p))
    if len(t) != k or any(t[i] < t[i + 1] for i in range(k - 1)) or t[-1] < 0:
        raise ValueError(f"not a partition of length <= {k}: {p!r}")
    return t


def box_partitions(k: int, width: int) -> list[Partition]:
    """All partitions with at most k rows and entries <= width, by degree."""
    out: list[Partition] = []

    def rec(prefix, bound):
        if len(prefix) == k:
            out.append(tuple(prefix))
            return
        for v in range(bound + 1):
            rec(prefix + [v], v)

    rec([], width)
    out.sort(key=lambda p: (sum(p), p))
    return out


def schur_mult2(p1: Partition, p2: Partition) -> dict[Partition, int]:
    """Pieri-rule product of two-variable Schur polynomials.

    pi_(i,j) * pi_(a,b) = sum of pi_(x,y) with x + y = i + j + a + b and
    a + i >= x >= max(a + j, b + i); every coefficient is 1.
    """
    i, j = normalize_partition(p1, 2)
    a, b = normalize_partition(p2, 2)
    total = i + j + a + b
    out = {}
    for x in range(max(a + j, b + i), a + i + 1):
        y = total - x
        if x >= y:
            out[(x, y)] = 1
    return out


def schur3_decompose(p: Partition) -> dict[tuple[Partition, int], int]:
    """Write a three-variable Schur polynomial over the first two variables.

    Returns ``{((a, b), c): 1}`` meaning ``sum pi_(a,b)(x1,x2) * x3^c`` where
    ``(a, b, c)`` runs over triples with a + b + c = i + j + k,
    i >= a >= j and j >= b >= k.
    """
    i, j, k = normalize_partition(p, 3)
    out = {}
    for a in range(j, i + 1):
        for b in range(k, j + 1):
            c = i + j + k - a - b
            out[((a, b), c)] = 1
    return out


# -- monomial expansions and Schur stripping (three variables) --------------


@lru_cache(maxsize=None)
def _schur_monomials(p: Partition, nvars: int) -> tuple[tuple[Partition, int], ...]:
    """Monomial expansion of a Schur polynomial in <= 3 variables."""
    if nvars == 1:
        return (((p[0],), 1),)
    if nvars == 2:
        i, j = p
        return tuple((((l, i + j - l)), 1) for l in range(j, i + 1))
    out: dict[tuple[int, int, int], int] = {}
    for ((a, b), c), _ in schur3_decompose(p).items():
        for mono2, _ in _schur_monomials((a, b), 2):
            m = (mono2[0], mono2[1], c)
            out[m] = out.get(m, 0) + 1
    return tuple(out.items())


@lru_cache(maxsize=None)
def schur_mult3(p1: Partition, p2: Partition) -> tuple[tuple[Partition, int], ...]:
    """Product of three-variable Schur polynomials in the Schur basis.

    Expands both factors into monomials and strips leading terms; exact and
    adequate for the small partitions that arise on triple facets.
    """
    poly: dict[tuple[int, int, int], int] = {}
    for m1, c1 in _schur_monomials(tuple(p1), 3):
        for m2, c2 in _schur_monomials(tuple(p2), 3):
            m = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2])
            v = poly.get(m, 0) + c1 * c2
            if v:
                poly[m] = v
            else:
                del poly[m]
    result: dict[Partition, int] = {}
    while poly:
        lead = max(poly)
        if tuple(sorted(lead, reverse=True)) != lead:
            raise AssertionError("symmetric polynomial with non-partition lead")
        coeff = poly[lead]
        result[lead] = coeff
        for m, c in _schur_monomials(lead, 3):
            v = poly.get(m, 0) - coeff * c
            if v:
                poly[m] = v
            elif m in poly:
                del poly[m]
    return tuple(sorted(result.items()))


class GrAlgebra:
    """The Frobenius algebra of dots on a type-k facet: H of the Grassmannian
    of k-planes in C^N over Z, in the Schur basis of the k x (N-k) box."""

    def __init__(self, k: int, N: int):
        if k not in (1, 2, 3):
            raise ValueError("facet type must be 1, 2 or 3")
        if N < k:
            raise ValueError("need N >= k")
        self.k = k
        self.N = N
        self.width = N - k
        self.sign = (-1) ** (k // 2)
        self.basis: list[Partition] = box_partitions(k, self.width)
        self.box: Partition = (self.width,) * k
        self._prod: dict[tuple[Partition, Partition], dict[Partition, int]] = {}

    # -- element helpers: elements are dicts partition -> int ---------------

    def unit(self) -> dict[Partition, int]:
        return {(0,) * self.k: 1}

    def element(self, p) -> dict[Partition, int]:
        p = normalize_partition(p, self.k)
        if p[0] > self.width:
            return {}
        return {p: 1}

    def in_box(self, p: Partition) -> bool:
        return p[0] <= self.width

    def product(self, p1: Partition, p2: Partition) -> dict[Partition, int]:
        p1 = normalize_partition(p1, self.k)
        p2 = normalize_partition(p2, self.k)
        key = (p1, p2) if p1 <= p2 else (p2, p1)
        cached = self._prod.get(key)
        if cached is not None:
            return dict(cached)
        if self.k == 1:
            s = p1[0] + p2[0]
            out = {(s,): 1} if s <= self.width else {}
        elif self.k == 2:
            out = {
                p: c for p, c in schur_mult2(p1, p2).items()
                if p[0] <= self.width
            }
        else:
            out = {
                p: c for p, c in schur_mult3(p1, p2)
                if p[0] <= self.width
            }
        self._prod[key] = out
        return dict(out)

    def multiply(self, e1: dict[Partition, int], e2: dict[Partition, int]
                 ) -> dict[Partition, int]:
        out: dict[Partition, int] = {}
        for p1, c1 in e1.items():
            for p2, c2 in e2.items():
                for p, c in self.product(p1, p2).items():
                    v = out.get(p, 0) + c1 * c2 * c
                    if v:
                        out[p] = v
                    elif p in out:
                        del out[p]
        return out

    def trace(self, expr: dict[Partition, int]) -> int:
        return self.sign * expr.get(self.box, 0)

    def dual(self, p) -> tuple[int, Partition]:
        """(sign, partition) with trace(product(p, dual)) = 1."""
        p = normalize_partition(p, self.k)
        comp = tuple(self.width - p[self.k - 1 - i] for i in range(self.k))
        return self.sign, comp

    def dual_element(self, p) -> dict[Partition, int]:
        s, comp = self.dual(p)
        return {comp: s}

    def handle(self) -> dict[Partition, int]:
        """Sum over the basis of pi * dual(pi): the genus-reduction element."""
        out: dict[Partition, int] = {}
        for p in self.basis:
            for q, c in self.multiply({p: 1}, self.dual_element(p)).items():
                out[q] = out.get(q, 0) + c
        return {q: c for q, c in out.items() if c}

    def dim(self) -> int:
        return comb(self.N, self.k)

    def degree(self, p: Partition) -> int:
        return 2 * sum(p)


@lru_cache(maxsize=None)
def gr_algebra(k: int, N: int) -> GrAlgebra:
    return GrAlgebra(k, N)


def neck_cut_pairs(k: int, N: int) -> list[tuple[Partition, int, Partition]]:
    """Cutting-neck expansion of the identity tube on a type-k facet.

    Returns triples ``(label, sign, dual label)``: the tube equals the sum of
    cup-with-label composed with cap-with-(sign * dual label).  For k = 1 the
    signs are all +1 and there are N terms; for k = 2, 3 all signs are -1
    (the global minus of the paper-style cutting relations).
    """
    A = gr_algebra(k, N)
    out = []
    for p in A.basis:
        s, comp = A.dual(p)
        out.append((p, s, comp))
    return out


# -- theta tensors -----------------------------------------------------------


def theta112(N: int, up: int, down: int, lam) -> int:
    """Closed (1,1,2) theta foam with ``up``/``down`` dots on the simple disks
    and ``pi_lam`` on the double disk.

    Equals the Fl(1,2;N) trace of x1^up x2^down pi_lam(x1,x2) normalized by
    eps(x1^(N-2) x2^(N-1)) = 1.
    """
    l1, l2 = normalize_partition(lam, 2)
    if up < 0 or down < 0 or l1 > N - 2:
        return 0
    if up + l1 == N - 2 and down + l2 == N - 1:
        return 1
    if up + l2 == N - 1 and down + l1 == N - 2:
        return -1
    return 0


@lru_cache(maxsize=None)
def _theta123_base(N: int):
    """Nonzero values with undecorated triple disk: {(double partition, simple dots): value}."""
    return {
        ((N - 2, N - 2), N - 3): -1,
        ((N - 3, N - 3), N - 1): -1,
        ((N - 2, N - 3), N - 2): 1,
    }


@lru_cache(maxsize=None)
def theta123(N: int, simple: int, lam2, lam3) -> int:
    """Closed (1,2,3) theta foam: ``simple`` dots, ``pi_lam2`` on the double
    disk, ``pi_lam3`` on the triple disk.

    Computed by migrating the triple decoration onto the other two disks
    (three-variable Schur decomposition) and reading off the base values.
    """
    lam2 = normalize_partition(lam2, 2)
    lam3 = normalize_partition(lam3, 3)
    if simple < 0 or lam2[0] > N - 2 or lam3[0] > N - 3:
        return 0
    base = _theta123_base(N)
    total = 0
    for ((a, b), c), _ in schur3_decompose(lam3).items():
        if simple + c > N - 1:
            continue
        for mu, coeff in schur_mult2(lam2, (a, b)).items():
            if mu[0] > N - 2:
                continue
            total += coeff * base.get((mu, simple + c), 0)
    return total


def theta123_nonzeros(N: int) -> dict[tuple[int, Partition, Partition], int]:
    """All nonzero (simple, double, triple) theta evaluations for given N."""
    out = {}
    A2 = gr_algebra(2, N)
    A3 = gr_algebra(3, N)
    for i in range(N):
        for lam2 in A2.basis:
            for lam3 in A3.basis:
                v = theta123(N, i, lam2, lam3)
                if v:
                    out[(i, lam2, lam3)] = v
    return out


# -- the universal sl(3) facet algebra over Z[a,b,c] -------------------------


class Sl3Algebra:
    """Dots in the universal sl(3) theory: Z[a,b,c][X]/(X^3 - aX^2 - bX - c).

    Elements are dicts ``{power: ABCScalar}`` with power in {0, 1, 2}.
    The trace is eps(X^2) = -1, eps(X) = eps(1) = 0.  Theta foams are
    evaluated in the universal cohomology of the full flag variety of C^3,
    whose defining relations are e1 = a, e2 = -b, e3 = c.
    """

    basis = (0, 1, 2)

    def unit(self):
        return {0: ABCScalar.one()}

    def element(self, power: int):
        return self.reduce({power: ABCScalar.one()})

    def reduce(self, e: dict[int, ABCScalar]) -> dict[int, ABCScalar]:
        out: dict[int, ABCScalar] = {}
        work = sorted(e.items(), reverse=True)
        a, b, c = (ABCScalar.gen(n) for n in "abc")
        while work:
            p, v = work.pop()
            if v.is_zero():
                continue
            if p <= 2:
                w = out.get(p, ABCScalar.zero()) + v
                if w.is_zero():
                    out.pop(p, None)
                else:
                    out[p] = w
            else:
                work.append((p - 1, a * v))
                work.append((p - 2, b * v))
                work.append((p - 3, c * v))
        return out

    def multiply(self, e1, e2):
        raw: dict[int, ABCScalar] = {}
        for p1, v1 in e1.items():
            for p2, v2 in e2.items():
                p = p1 + p2
                raw[p] = raw.get(p, ABCScalar.zero()) + v1 * v2
        return self.reduce(raw)

    def trace(self, e) -> ABCScalar:
        return -e.get(2, ABCScalar.zero())

    def dual_element(self, power: int) -> dict[int, ABCScalar]:
        a, b = ABCScalar.gen("a"), ABCScalar.gen("b")
        one = ABCScalar.one()
        if power == 0:
            return {2: -one, 1: a, 0: b}
        if power == 1:
            return {1: -one, 0: a}
        if power == 2:
            return {0: -one}
        raise ValueError("basis powers are 0, 1, 2")

    def handle(self):
        out: dict[int, ABCScalar] = {}
        for p in self.basis:
            for q, v in self.multiply({p: ABCScalar.one()},
                                      self.dual_element(p)).items():
                out[q] = out.get(q, ABCScalar.zero()) + v
        return {q: v for q, v in out.items() if not v.is_zero()}

    # flag-variety reduction for theta foams: basis X1^i X2^j, i <= 2, j <= 1

    def _fl3_reduce(self, e: dict[tuple[int, int], ABCScalar]
                    ) -> dict[tuple[int, int], ABCScalar]:
        a, b, c = (ABCScalar.gen(n) for n in "abc")
        out: dict[tuple[int, int], ABCScalar] = {}
        work = list(e.items())
        while work:
            (i, j), v = work.pop()
            if v.is_zero():
                continue
            if i > 2:
                # X1^3 = a X1^2 + b X1 + c
                work.append(((i - 1, j), a * v))
                work.append(((i - 2, j), b * v))
                work.append(((i - 3, j), c * v))
            elif j > 1:
                # X2^2 = -X1^2 - X1 X2 + a(X1 + X2) + b
                work.append(((i + 2, j - 2), -v))
                work.append(((i + 1, j - 1), -v))
                work.append(((i + 1, j - 2), a * v))
                work.append(((i, j - 1), a * v))
                work.append(((i, j - 2), b * v))
            else:
                w = out.get((i, j), ABCScalar.zero()) + v
                if w.is_zero():
                    out.pop((i, j), None)
                else:
                    out[(i, j)] = w
        return out

    @lru_cache(maxsize=None)
    def theta(self, alpha: int, beta: int, delta: int) -> ABCScalar:
        """Value of the sl(3) theta foam with alpha, beta, delta dots on the
        facets X1, X2, X3 read along the oriented singular circle."""
        a = ABCScalar.gen("a")
        one = ABCScalar.one()
        # substitute X3 = a - X1 - X2 and expand
        e: dict[tuple[int, int], ABCScalar] = {(alpha, beta): one}
        for _ in range(delta):
            nxt: dict[tuple[int, int], ABCScalar] = {}
            for (i, j), v in e.items():
                for key, w in (((i, j), a * v), ((i + 1, j), -v),
                               ((i, j + 1), -v)):
                    nxt[key] = nxt.get(key, ABCScalar.zero()) + w
            e = nxt
        reduced = self._fl3_reduce(e)
        return -reduced.get((2, 1), ABCScalar.zero())


_SL3 = Sl3Algebra()


def sl3_algebra() -> Sl3Algebra:
    return _SL3


def sl3_theta(alpha: int, beta: int, delta: int) -> ABCScalar:
    return _SL3.theta(alpha, beta, delta)


# -- graded ranks of H(Fl_{2,3,N}), used by the torus-link closed form -------


def flag23_poincare(N: int) -> dict[int, int]:
    """Graded ranks of the integral cohomology of Fl(2,3;N): free module over
    H(G(3,N)) with basis 1, x3, ..., x3^(N-3) twisted by the 2-plane flag,
    equivalently Schur basis pairs (lambda in 2 x (N-2) box) x (0 <= c <= N-3)."""
    out: dict[int, int] = {}
    for lam in box_partitions(2, N - 2):
        for c in range(N - 2):
            d = 2 * (sum(lam) + c)
            out[d] = out.get(d, 0) + 1
    return out
