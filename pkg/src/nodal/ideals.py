"""Ideal operations: sums, products, intersections, colons, saturation,
elimination, codimension, and the reducedness certificate for point schemes.

Saturation by the irrelevant ideal is the workhorse of the conductor
pipelines, so it avoids colon iterations entirely: in a graded reverse
lexicographic order whose cheapest variable is x, a homogeneous basis element
is divisible by x exactly when its lead is, so dividing x out of a reduced
basis realises the colon by x to all orders at once.  An element lies in the
irrelevant saturation exactly when every variable separately multiplies it
into the ideal at some power, so the saturation is the intersection of those
single-variable colons, one cheap basis each.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

import numpy as np

from . import linalg
from .errors import CharacteristicError, InvariantViolation
from .groebner import (
    DEFAULT_DEGREE_CAP,
    FreeModuleShape,
    GroebnerBasis,
    ModuleElement,
    PositionOverTerm,
    groebner_basis,
    minimal_module_generators,
    normal_form,
)
from .ring import BlockElimination, Grevlex, Polynomial, Ring, mono_mul


class Ideal:
    """Ideal with cached reduced bases, one per monomial order."""

    __slots__ = ("ring", "gens", "_gb_cache")

    def __init__(self, ring: Ring, gens):
        self.ring = ring
        self.gens = tuple(g for g in gens if g)
        for g in self.gens:
            if g.ring != ring:
                raise ValueError("generator over a different ring")
        self._gb_cache: dict[str, GroebnerBasis] = {}

    @classmethod
    def parse(cls, ring: Ring, texts) -> "Ideal":
        return cls(ring, [ring.parse(t) for t in texts])

    def gb(self, order=None, cap: int = DEFAULT_DEGREE_CAP) -> GroebnerBasis:
        order = order if order is not None else self.ring.grevlex
        cached = self._gb_cache.get(order.name)
        if cached is None:
            if not self.gens:
                cached = GroebnerBasis(
                    self.ring, None, order, ()
                )
            else:
                cached = groebner_basis(self.gens, order, cap)
            self._gb_cache[order.name] = cached
        return cached

    def contains(self, f: Polynomial) -> bool:
        if not f:
            return True
        if not self.gens:
            return False
        return not normal_form(f, self.gb())

    def contains_ideal(self, other: "Ideal") -> bool:
        return all(self.contains(g) for g in other.gens)

    def same_ideal(self, other: "Ideal") -> bool:
        if self.ring != other.ring:
            return False
        return list(self.gb().elements) == list(other.gb().elements)

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        gb = self.gb()
        return len(gb) == 1 and gb.elements[0] == self.ring.one()

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.gens)

    def minimal_gens(self) -> list[Polynomial]:
        if not self.is_homogeneous():
            raise ValueError("minimal generators need homogeneous input")
        return minimal_module_generators(list(self.gb().elements))

    def graded_dim(self, degree: int) -> int:
        """dim of the degree slice of the ideal itself."""
        total = len(self.ring.monomials_of_degree(degree))
        return total - self.quotient_dim(degree)

    def quotient_dim(self, degree: int) -> int:
        """dim of the degree slice of ring/ideal: count standard monomials."""
        if degree < 0:
            return 0
        if not self.gens:
            return len(self.ring.monomials_of_degree(degree))
        leads = self.gb().lead_monomials()
        count = 0
        for m in self.ring.monomials_of_degree(degree):
            if not any(all(a <= b for a, b in zip(g, m)) for g in leads):
                count += 1
        return count

    def graded_basis(self, degree: int, cap: int = DEFAULT_DEGREE_CAP):
        """Vector-space basis of the degree slice, in echelon form."""
        if degree < 0 or not self.gens:
            return []
        gb = self.gb(cap=cap)
        rows, monos = _ideal_degree_basis_rows(gb, degree)
        R, _ = linalg.rref(rows, self.ring.p)
        return [
            Polynomial(self.ring, {monos[i]: int(v) for i, v in enumerate(row) if v})
            for row in R
        ]

    def __repr__(self):
        inside = ", ".join(str(g) for g in self.gens[:4])
        if len(self.gens) > 4:
            inside += ", ..."
        return f"Ideal({inside})"


def irrelevant_ideal(ring: Ring) -> Ideal:
    return Ideal(ring, ring.gens())


def ideal_sum(a: Ideal, b: Ideal) -> Ideal:
    return Ideal(a.ring, a.gens + b.gens)


def ideal_product(a: Ideal, b: Ideal) -> Ideal:
    if a.is_zero() or b.is_zero():
        return Ideal(a.ring, ())
    return Ideal(a.ring, [f * g for f in a.gens for g in b.gens])


def scale_ideal(a: Ideal, f: Polynomial) -> Ideal:
    return Ideal(a.ring, [f * g for g in a.gens])


# ---------------------------------------------------------------------------
# Intersection and colon via one auxiliary variable


def _aux_ring(ring: Ring) -> Ring:
    name = "t_"
    while name in ring.names:
        name += "_"
    return Ring(ring.names + (name,), p=ring.p)


def _embed(f: Polynomial, big: Ring) -> Polynomial:
    return Polynomial(big, {m + (0,): c for m, c in f.terms.items()})


def _project(f: Polynomial, small: Ring) -> Polynomial:
    terms = {}
    for m, c in f.terms.items():
        if m[-1] != 0:
            raise InvariantViolation("projection hit the auxiliary variable")
        terms[m[:-1]] = c
    return Polynomial(small, terms)


def _intersect_elimination(a: Ideal, b: Ideal, cap: int) -> Ideal:
    """a ∩ b through t*a + (1-t)*b and elimination of t."""
    ring = a.ring
    big = _aux_ring(ring)
    t = big.gen(big.nvars - 1)
    one_minus_t = big.one() - t
    gens = [t * _embed(f, big) for f in a.gens]
    gens += [one_minus_t * _embed(g, big) for g in b.gens]
    order = BlockElimination(big.nvars, elim=(big.nvars - 1,))
    gb = groebner_basis(gens, order, cap)
    kept = [g for g in gb.elements if g.lead_monomial(order)[-1] == 0]
    return Ideal(ring, [_project(g, ring) for g in kept])


def _intersect_module(a: Ideal, b: Ideal, cap: int) -> Ideal:
    """a ∩ b by elimination inside a rank-2 free module.

    The submodule generated by (f, f) for f in a and (g, 0) for g in b meets
    the second coordinate axis exactly in a ∩ b: writing (0, h) as a
    combination forces h into a through the second coordinate and into b
    through the first.  Under position-over-term with the first component
    most expensive, basis elements led in the second component carry no
    first-component part at all, so the axis slice falls straight out.
    """
    ring = a.ring
    shape = FreeModuleShape(2, (0, 0))
    zero = ring.zero()
    gens = [ModuleElement.from_polynomials(shape, [f, f]) for f in a.gens]
    gens += [ModuleElement.from_polynomials(shape, [g, zero]) for g in b.gens]
    order = PositionOverTerm(ring.grevlex, 2)
    gb = groebner_basis(gens, order, cap)
    kept = [z.component(1) for z in gb.elements if not z.component(0)]
    return Ideal(ring, kept)


def intersect(a: Ideal, b: Ideal, cap: int = DEFAULT_DEGREE_CAP) -> Ideal:
    """a ∩ b; homogeneous pairs stay in the ring, others pay for one t."""
    if a.ring != b.ring:
        raise InvariantViolation("intersection across different rings")
    if a.is_zero() or b.is_zero():
        return Ideal(a.ring, ())
    if a.is_homogeneous() and b.is_homogeneous():
        return _intersect_module(a, b, cap)
    return _intersect_elimination(a, b, cap)


def exact_divide(g: Polynomial, f: Polynomial) -> Polynomial:
    """Quotient g/f when f divides g exactly."""
    ring = g.ring
    if not f:
        raise ZeroDivisionError("division by the zero polynomial")
    order = ring.grevlex
    lf = f.lead_monomial(order)
    cf_inv = pow(f.lead_coefficient(order), -1, ring.p)
    q = ring.zero()
    rest = g
    while rest:
        lm = rest.lead_monomial(order)
        m = tuple(a - b for a, b in zip(lm, lf))
        if any(e < 0 for e in m):
            raise InvariantViolation("exact division left a remainder")
        c = rest.lead_coefficient(order) * cf_inv % ring.p
        piece = ring.monomial(m, c)
        q = q + piece
        rest = rest - piece * f
    return q


def quotient_by_poly(a: Ideal, f: Polynomial, cap: int = DEFAULT_DEGREE_CAP) -> Ideal:
    """Colon a : (f) as (a ∩ (f)) / f."""
    ring = a.ring
    if not f:
        return Ideal(ring, [ring.one()])
    if a.is_zero():
        return Ideal(ring, ())
    meet = intersect(a, Ideal(ring, [f]), cap)
    return Ideal(ring, [exact_divide(g, f) for g in meet.gens])


def quotient(a: Ideal, b, cap: int = DEFAULT_DEGREE_CAP) -> Ideal:
    """Colon a : b for b a polynomial or an ideal."""
    if isinstance(b, Polynomial):
        return quotient_by_poly(a, b, cap)
    if b.is_zero():
        return Ideal(a.ring, [a.ring.one()])
    acc = None
    for g in b.gens:
        cur = quotient_by_poly(a, g, cap)
        acc = cur if acc is None else intersect(acc, cur, cap)
    return acc


# ---------------------------------------------------------------------------
# Saturation


def _strip_var(f: Polynomial, i: int) -> tuple[Polynomial, int]:
    v = min(m[i] for m in f.terms)
    if v == 0:
        return f, 0
    terms = {m[:i] + (m[i] - v,) + m[i + 1 :]: c for m, c in f.terms.items()}
    return Polynomial(f.ring, terms), v


@lru_cache(maxsize=None)
def _rotated_grevlex(n: int, var: int) -> Grevlex:
    perm = tuple(j for j in range(n) if j != var) + (var,)
    return Grevlex(n, perm)


def _divide_out(a: Ideal, var: int, cap: int) -> tuple[Ideal, bool]:
    """Full colon a : x_var^∞ of a homogeneous ideal in one basis pass."""
    order = _rotated_grevlex(a.ring.nvars, var)
    gb = a.gb(order, cap)
    stripped = []
    changed = False
    for g in gb.elements:
        h, v = _strip_var(g, var)
        changed = changed or v > 0
        stripped.append(h)
    return Ideal(a.ring, stripped), changed


def saturate_irrelevant(a: Ideal, cap: int = DEFAULT_DEGREE_CAP) -> Ideal:
    """Saturation with respect to (x_0, ..., x_{n-1}) by basis divide-out.

    Requires homogeneous input.  The result is the intersection over the
    variables of the single-variable colons a : x_i^∞, each a one-pass
    divide-out of a reduced basis ordered with x_i cheapest.  Iterating
    single-variable colons instead would saturate by the product of the
    variables, a different and generally much larger ideal.  If some variable
    strips nothing then a is stable under that colon and already saturated.
    """
    ring = a.ring
    if a.is_zero():
        return a
    if not a.is_homogeneous():
        raise ValueError("divide-out saturation needs homogeneous input")
    parts = []
    for var in range(ring.nvars):
        part, changed = _divide_out(a, var, cap)
        if not changed:
            return Ideal(ring, a.gb(cap=cap).elements)
        parts.append(part)
    meet = parts[0]
    for part in parts[1:]:
        meet = intersect(meet, part, cap)
    return Ideal(ring, meet.gb(cap=cap).elements)


def saturate(a: Ideal, b: Ideal | None = None, cap: int = DEFAULT_DEGREE_CAP) -> Ideal:
    """Saturation a : b^∞; b defaults to the irrelevant ideal."""
    ring = a.ring
    if b is None or (a.is_homogeneous() and b.same_ideal(irrelevant_ideal(ring))):
        if a.is_homogeneous():
            return saturate_irrelevant(a, cap)
        b = irrelevant_ideal(ring)
    prev = a
    for _ in range(50):
        nxt = quotient(prev, b, cap)
        if nxt.same_ideal(prev):
            return Ideal(ring, prev.gb().elements)
        prev = nxt
    raise InvariantViolation("iterated colon saturation failed to stabilize")


# ---------------------------------------------------------------------------
# Elimination and codimension


def eliminate(a: Ideal, drop, cap: int = DEFAULT_DEGREE_CAP) -> Ideal:
    """Intersect with the subring omitting the variables in `drop`.

    Returns an ideal of the smaller ring on the kept variables.
    """
    ring = a.ring
    drop = tuple(
        ring.var_index(v) if isinstance(v, str) else int(v) for v in drop
    )
    if not drop:
        return Ideal(ring, a.gens)
    keep = tuple(i for i in range(ring.nvars) if i not in drop)
    if not keep:
        raise ValueError("cannot eliminate every variable")
    small = Ring(tuple(ring.names[i] for i in keep), p=ring.p)
    if a.is_zero():
        return Ideal(small, ())
    order = BlockElimination(ring.nvars, elim=drop)
    gb = groebner_basis(a.gens, order, cap)
    kept = []
    for g in gb.elements:
        lm = g.lead_monomial(order)
        if any(lm[i] for i in drop):
            continue
        terms = {}
        for m, c in g.terms.items():
            if any(m[i] for i in drop):
                raise InvariantViolation("elimination kept a mixed element")
            terms[tuple(m[i] for i in keep)] = c
        kept.append(Polynomial(small, terms))
    return Ideal(small, kept)


def codimension(a: Ideal, cap: int = DEFAULT_DEGREE_CAP) -> int:
    """Height of the ideal via its lead monomial ideal.

    The lead ideal is a flat degeneration, so its codimension agrees; for a
    monomial ideal the minimal primes are coordinate subspaces, and the
    height is the smallest number of variables meeting every generator.
    Returns 0 for the zero ideal and nvars + 1 for the unit ideal.
    """
    if a.is_zero():
        return 0
    leads = a.gb(cap=cap).lead_monomials()
    if any(not any(m) for m in leads):
        return a.ring.nvars + 1
    n = a.ring.nvars
    for size in range(1, n + 1):
        for subset in combinations(range(n), size):
            if all(any(m[i] for i in subset) for m in leads):
                return size
    raise InvariantViolation("no variable cover found")  # pragma: no cover


def curve_is_squarefree(f: Polynomial, cap: int = DEFAULT_DEGREE_CAP) -> bool:
    """No repeated component: the singular scheme has codimension >= 2."""
    ring = f.ring
    if not f or not f.is_homogeneous():
        raise ValueError("need a nonzero homogeneous form")
    d = f.homogeneous_degree()
    if d % ring.p == 0:
        raise CharacteristicError(
            "degree divisible by the characteristic; the criterion fails"
        )
    gens = [f] + [f.partial_derivative(i) for i in range(ring.nvars)]
    return codimension(Ideal(ring, gens), cap) >= 2


# ---------------------------------------------------------------------------
# Finite schemes: length, symbolic square, reducedness certificate


def scheme_length(a: Ideal, limit: int = 500) -> int:
    """Stable value of the Hilbert function of ring/a.

    Valid for a saturated ideal of a finite scheme: the function is
    nondecreasing and constant once it stabilizes, so the first repeat is the
    length.
    """
    prev = a.quotient_dim(0)
    for e in range(1, limit):
        cur = a.quotient_dim(e)
        if cur == prev:
            return cur
        prev = cur
    raise InvariantViolation("Hilbert function did not stabilize")


def symbolic_square(a: Ideal, cap: int = DEFAULT_DEGREE_CAP) -> Ideal:
    """Forms vanishing doubly on the finite scheme: saturate the square."""
    return saturate(ideal_product(a, a), cap=cap)


def indeg(a: Ideal) -> int:
    """Smallest degree of a nonzero element of a homogeneous ideal."""
    if a.is_zero():
        raise ValueError("the zero ideal has no initial degree")
    return min(g.homogeneous_degree() for g in a.minimal_gens())


@dataclass
class ReducednessReport:
    """Outcome of the generic-projection certificate for a point scheme."""

    reduced: bool
    length: int
    distinct_points: int | None
    attempts: int

    def as_dict(self):
        return {
            "reduced": self.reduced,
            "length": self.length,
            "distinct_points": self.distinct_points,
            "attempts": self.attempts,
        }


def _ideal_degree_basis_rows(gb: GroebnerBasis, degree: int):
    """A vector-space basis of the degree slice of the ideal.

    One row per degree-`degree` monomial inside the lead ideal: the multiple
    of the first basis element whose lead divides it.  Distinct leads make
    the rows independent, and the count matches the slice dimension.
    """
    ring = gb.ring
    monos = ring.monomials_of_degree(degree)
    col = {m: i for i, m in enumerate(monos)}
    leads = gb.lead_monomials()
    rows = []
    for m in monos:
        hit = None
        for g, lm in zip(gb.elements, leads):
            q = tuple(a - b for a, b in zip(m, lm))
            if all(e >= 0 for e in q):
                hit = (g, q)
                break
        if hit is None:
            continue
        g, q = hit
        row = np.zeros(len(monos), dtype=np.int64)
        for mm, c in g.terms.items():
            row[col[mono_mul(mm, q)]] = c
        rows.append(row)
    if rows:
        return np.vstack(rows), monos
    return np.zeros((0, len(monos)), dtype=np.int64), monos


def _uni_trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _uni_deriv(c: list[int], p: int) -> list[int]:
    return _uni_trim([k * c[k] % p for k in range(1, len(c))])


def _uni_rem(a: list[int], b: list[int], p: int) -> list[int]:
    a = list(a)
    inv = pow(b[-1], -1, p)
    while len(a) >= len(b):
        f = a[-1] * inv % p
        off = len(a) - len(b)
        for k in range(len(b)):
            a[off + k] = (a[off + k] - f * b[k]) % p
        _uni_trim(a)
        if not a:
            break
    return a


def _uni_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _uni_trim(list(a)), _uni_trim(list(b))
    while b:
        a, b = b, _uni_rem(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [x * inv % p for x in a]
    return a


def _binary_form_squarefree(coeffs, delta: int, p: int) -> bool:
    """Squarefree test for sum(coeffs[a] * u^a * v^(delta-a))."""
    c = _uni_trim([int(x) % p for x in coeffs])
    if not c:
        raise InvariantViolation("zero binary form")
    if delta - (len(c) - 1) >= 2:
        return False  # the v-root repeats
    d = _uni_deriv(c, p)
    if not d:
        return len(c) == 1  # constant in u: fine only when delta contributes <= 1
    return len(_uni_gcd(c, d, p)) == 1


def points_are_reduced(
    a: Ideal,
    seed: int = 0,
    attempts: int = 8,
    cap: int = DEFAULT_DEGREE_CAP,
) -> ReducednessReport:
    """Certify that a saturated finite scheme in the plane is reduced.

    Project from a random point: with W the span of the products
    l1^k * l2^(delta-k) of two random linear forms, the slice (ideal)_delta
    meets W in dimension one exactly when the projection is injective on the
    scheme, and the unique binary form in the intersection is the image
    cycle.  A squarefree image certifies delta distinct reduced points.  A
    repeated factor or a fat intersection can be bad luck of the projection
    center, so the test retries; schemes with embedded or fat structure fail
    every attempt.
    """
    ring = a.ring
    if ring.nvars != 3:
        raise ValueError("the projection certificate works in the plane")
    if codimension(a, cap) < 2:
        raise ValueError("not a finite scheme")
    delta = scheme_length(a)
    if delta == 0:
        return ReducednessReport(True, 0, 0, 0)
    rng = random.Random(seed)
    gb = a.gb(cap=cap)
    rows, monos = _ideal_degree_basis_rows(gb, delta)
    R, piv = linalg.rref(rows, ring.p)
    col = {m: i for i, m in enumerate(monos)}
    used = 0
    for _ in range(attempts):
        used += 1
        l1 = ring.random_linear(rng)
        l2 = ring.random_linear(rng)
        lin = np.zeros((2, 3), dtype=np.int64)
        for j, f in enumerate((l1, l2)):
            for m, c in f.terms.items():
                lin[j, m.index(1)] = c
        if linalg.rank(lin, ring.p) < 2:
            continue
        pow1 = [ring.one()]
        pow2 = [ring.one()]
        for _k in range(delta):
            pow1.append(pow1[-1] * l1)
            pow2.append(pow2[-1] * l2)
        wrows = np.zeros((delta + 1, len(monos)), dtype=np.int64)
        for k in range(delta + 1):
            w = pow1[k] * pow2[delta - k]
            for m, c in w.terms.items():
                wrows[k, col[m]] = c
        reduced_w = linalg.reduce_rows(R, piv, wrows, ring.p)
        lam = linalg.nullspace(reduced_w.T, ring.p)
        if lam.shape[0] == 0:
            raise InvariantViolation("no cycle form found in the slice")
        if lam.shape[0] > 1:
            # two independent forms through the scheme: fat structure or a
            # degenerate center; try another center
            continue
        if _binary_form_squarefree(lam[0], delta, ring.p):
            return ReducednessReport(True, delta, delta, used)
    return ReducednessReport(False, delta, None, used)
