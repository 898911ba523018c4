"""Groebner bases for ideals and submodules of twisted free modules.

Two engines share the work.  A degreewise Macaulay-matrix elimination handles
homogeneous ideal input: it row-reduces the span of all monomial multiples of
the current basis one degree at a time, harvesting new lead monomials until no
S-pair degree is outstanding.  For every ideal this yields the unique reduced
basis directly.  Everything else (modules, inhomogeneous input, runs that must
record division expressions) goes through Buchberger with the Gebauer-Moeller
pair criteria.

Terms of a module element are keyed (component, monomial) and compared through
integer keys, see ring.py.  Component twists record generator degrees, so the
module degree of a term is deg(monomial) + twist(component).
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import DegreeCapExceeded, InvariantViolation, RingMismatchError
from .ring import (
    Mono,
    MonomialOrder,
    Polynomial,
    Ring,
    mono_degree,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)

DEFAULT_DEGREE_CAP = 40

# A module term is (component, monomial); module elements are dicts mapping
# terms to nonzero coefficients.
Term = tuple[int, Mono]

_COMP_SHIFT = 24  # component field width inside Schreyer keys


@dataclass(frozen=True)
class FreeModuleShape:
    """Rank and generator degrees of a twisted free module.

    Basis element i generates a copy of the ring shifted so that its generator
    sits in degree twists[i].
    """

    rank: int
    twists: tuple[int, ...]

    def __post_init__(self):
        if self.rank != len(self.twists):
            raise ValueError("twist count must equal rank")
        if self.rank < 0:
            raise ValueError("rank must be nonnegative")

    @classmethod
    def plain(cls, rank: int) -> "FreeModuleShape":
        return cls(rank, (0,) * rank)

    def term_degree(self, term: Term) -> int:
        comp, mono = term
        return mono_degree(mono) + self.twists[comp]


class ModuleOrder:
    """Total order on module terms, realised as an integer key."""

    def key(self, term: Term) -> int:  # pragma: no cover - interface
        raise NotImplementedError


class PositionOverTerm(ModuleOrder):
    """Earlier components dominate; ties broken by the base ring order."""

    __slots__ = ("base", "rank", "_shift")

    def __init__(self, base: MonomialOrder, rank: int):
        self.base = base
        self.rank = rank
        self._shift = 8 * (base.n + 2)

    def key(self, term: Term) -> int:
        comp, mono = term
        return ((self.rank - comp) << self._shift) | self.base.key(mono)


class SchreyerOrder(ModuleOrder):
    """Order induced by a list of lead terms over a base order.

    Terms are compared by the base key of the monomial times the lead of their
    component; ties go to the earlier component.  The base may be a ring order
    wrapped in a rank-1 adapter, or itself a module order, which is how orders
    chain along a resolution.
    """

    __slots__ = ("base", "leads", "rank")

    def __init__(self, base, leads: tuple[Term, ...]):
        self.base = base
        self.leads = leads
        self.rank = len(leads)

    def key(self, term: Term) -> int:
        comp, mono = term
        lcomp, lmono = self.leads[comp]
        base_key = self.base.key((lcomp, mono_mul(mono, lmono)))
        return (base_key << _COMP_SHIFT) | (self.rank - comp)


class RingOrderAdapter(ModuleOrder):
    """Presents a ring monomial order as a rank-1 module order."""

    __slots__ = ("base",)

    def __init__(self, base: MonomialOrder):
        self.base = base

    def key(self, term: Term) -> int:
        return self.base.key(term[1])


class ModuleElement:
    """Element of a twisted free module over one ring."""

    __slots__ = ("ring", "shape", "terms")

    def __init__(self, ring: Ring, shape: FreeModuleShape, terms: dict):
        self.ring = ring
        self.shape = shape
        self.terms = terms

    @classmethod
    def from_polynomials(cls, shape: FreeModuleShape, polys) -> "ModuleElement":
        polys = list(polys)
        if len(polys) != shape.rank:
            raise ValueError("component count must equal rank")
        ring = polys[0].ring
        terms: dict[Term, int] = {}
        for comp, f in enumerate(polys):
            if f.ring != ring:
                raise RingMismatchError("components over different rings")
            for mono, c in f.terms.items():
                terms[(comp, mono)] = c
        return cls(ring, shape, terms)

    def component(self, comp: int) -> Polynomial:
        terms = {m: c for (tc, m), c in self.terms.items() if tc == comp}
        return Polynomial(self.ring, terms)

    def components(self) -> list[Polynomial]:
        return [self.component(i) for i in range(self.shape.rank)]

    def module_degree(self):
        """Common degree of all terms, or None for the zero element."""
        degs = {self.shape.term_degree(t) for t in self.terms}
        if not degs:
            return None
        if len(degs) > 1:
            raise InvariantViolation("module element is not homogeneous")
        return degs.pop()

    def is_homogeneous(self) -> bool:
        return len({self.shape.term_degree(t) for t in self.terms}) <= 1

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, ModuleElement):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.shape == other.shape
            and self.terms == other.terms
        )

    __hash__ = None

    def __str__(self):
        return "(" + ", ".join(str(f) for f in self.components()) + ")"

    __repr__ = __str__


def _poly_to_dict(f: Polynomial) -> dict:
    return {(0, m): c for m, c in f.terms.items()}


def _dict_to_poly(ring: Ring, d: dict) -> Polynomial:
    return Polynomial(ring, {m: c for (_, m), c in d.items()})


class _Gel:
    """Engine-internal basis element: monic, lead split off the tail."""

    __slots__ = ("index", "lead", "key", "tail", "full", "trace")

    def __init__(self, index, lead, key, tail, full, trace):
        self.index = index
        self.lead = lead
        self.key = key
        self.tail = tail  # tuple of (term, coeff), lead excluded
        self.full = full  # dict including the lead
        self.trace = trace  # expression over the input generators, or None


def _make_gel(ring: Ring, d: dict, keyf, index: int, trace) -> _Gel:
    lead = max(d, key=keyf)
    lc = d[lead]
    if lc != 1:
        inv = pow(lc, -1, ring.p)
        d = {t: c * inv % ring.p for t, c in d.items()}
        if trace is not None:
            trace = {t: c * inv % ring.p for t, c in trace.items()}
    tail = tuple((t, c) for t, c in d.items() if t != lead)
    return _Gel(index, lead, keyf(lead), tail, d, trace)


def _normal_form_dict(work_in, gels_by_comp, keyf, p, cap, trace=None):
    """Fully reduce a term dict against the bucketed basis.

    Returns the remainder.  When trace is given it must satisfy the invariant
    input = remainder-so-far + sum(trace * original generators); each step
    f -> f - c * x^q * red composes red's own trace into it, keeping the
    expression over the original generators exact.
    """
    work = dict(work_in)
    heap = [(-keyf(t), t) for t in work]
    heapq.heapify(heap)
    rem: dict[Term, int] = {}
    while heap:
        _, t = heapq.heappop(heap)
        c = work.pop(t, 0)
        if not c:
            continue
        comp, mono = t
        red = None
        for g in gels_by_comp.get(comp, ()):
            if mono_divides(g.lead[1], mono):
                red = g
                break
        if red is None:
            rem[t] = c
            continue
        q = mono_div(mono, red.lead[1])
        if trace is not None:
            for (idx, tm), tc in red.trace.items():
                tk = (idx, mono_mul(tm, q))
                nv = (trace.get(tk, 0) - c * tc) % p
                if nv:
                    trace[tk] = nv
                else:
                    trace.pop(tk, None)
        for (tc, tm), gc in red.tail:
            nm = mono_mul(tm, q)
            if mono_degree(nm) > cap:
                raise DegreeCapExceeded(
                    f"reduction passed total degree {cap}", cap=cap
                )
            nt = (tc, nm)
            prev = work.get(nt)
            if prev is None:
                nv = -c * gc % p
                if nv:
                    work[nt] = nv
                    heapq.heappush(heap, (-keyf(nt), nt))
            else:
                nv = (prev - c * gc) % p
                if nv:
                    work[nt] = nv
                else:
                    del work[nt]
    return rem


def _shift_dict(d: dict, q: Mono) -> dict:
    return {(c, mono_mul(m, q)): v for (c, m), v in d.items()}


def _sub_into(acc: dict, d: dict, p: int):
    for t, v in d.items():
        nv = (acc.get(t, 0) - v) % p
        if nv:
            acc[t] = nv
        else:
            acc.pop(t, None)


def _poly_times_trace(poly_dict, trace, p):
    """Rank-1 element times an expression, term by term."""
    out: dict[Term, int] = {}
    for (_, m), c in poly_dict.items():
        for (idx, tm), tc in trace.items():
            key = (idx, mono_mul(m, tm))
            nv = (out.get(key, 0) + c * tc) % p
            if nv:
                out[key] = nv
            else:
                out.pop(key, None)
    return out


def _buchberger_engine(ring, elems, keyf, cap, rank1, want_traces):
    """Shared Buchberger core.

    elems: list of term dicts (zeros allowed, skipped).  Returns
    (gels, syzygies): the raw run basis in insertion order, plus the collected
    expressions over the inputs when want_traces is set.  Every nonzero input
    enters the run basis with a unit trace, so zero-reduction expressions are
    syzygies of the inputs themselves; product-criterion skips are repaired
    with Koszul relations so the collection generates the syzygy module.
    """
    p = ring.p
    zero_mono = tuple([0] * ring.nvars)
    gels: list[_Gel] = []
    by_comp: dict[int, list[_Gel]] = {}
    syzygies: list[dict] = []
    koszul_pairs: list[tuple[int, int]] = []
    alive: dict[tuple[int, int], Mono] = {}
    heap: list[tuple[int, int, int]] = []

    def insert(d, trace):
        t = len(gels)
        g = _make_gel(ring, d, keyf, t, trace)
        cand = []
        for other in gels:
            if other.lead[0] != g.lead[0]:
                continue
            cand.append((other.index, mono_lcm(other.lead[1], g.lead[1])))
        # Gebauer-Moeller: drop candidates whose lcm is properly divisible by
        # another candidate's lcm, then keep one candidate per distinct lcm.
        kept = []
        for i, lcm in cand:
            drop = False
            for j, lcm2 in cand:
                if j != i and lcm2 != lcm and mono_divides(lcm2, lcm):
                    drop = True
                    break
            if not drop:
                kept.append((i, lcm))
        seen: set[Mono] = set()
        deduped = []
        for i, lcm in sorted(kept):
            if lcm in seen:
                continue
            seen.add(lcm)
            deduped.append((i, lcm))
        # Prune queued pairs strictly covered by the new lead.
        lm = g.lead[1]
        for (i, j), lcm in list(alive.items()):
            if gels[i].lead[0] != g.lead[0]:
                continue
            if not mono_divides(lm, lcm):
                continue
            if mono_lcm(gels[i].lead[1], lm) == lcm:
                continue
            if mono_lcm(gels[j].lead[1], lm) == lcm:
                continue
            del alive[(i, j)]
        for i, lcm in deduped:
            other = gels[i]
            if rank1 and lcm == mono_mul(other.lead[1], g.lead[1]):
                # Coprime leads: the S-pair reduces to zero and its syzygy is
                # the Koszul relation, filled in afterwards when traced.
                if want_traces:
                    koszul_pairs.append((i, t))
                continue
            alive[(i, t)] = lcm
            heapq.heappush(heap, (mono_degree(lcm), i, t))
        gels.append(g)
        by_comp.setdefault(g.lead[0], []).append(g)

    for idx, d in enumerate(elems):
        if not d:
            if want_traces:
                syzygies.append({(idx, zero_mono): 1})
            continue
        trace = {(idx, zero_mono): 1} if want_traces else None
        insert(dict(d), trace)

    while heap:
        deg, i, j = heapq.heappop(heap)
        if alive.pop((i, j), None) is None:
            continue
        if deg > cap:
            raise DegreeCapExceeded(
                f"S-pair degree {deg} passed the cap {cap}", cap=cap
            )
        gi, gj = gels[i], gels[j]
        lcm = mono_lcm(gi.lead[1], gj.lead[1])
        qi = mono_div(lcm, gi.lead[1])
        qj = mono_div(lcm, gj.lead[1])
        s = _shift_dict(gi.full, qi)
        _sub_into(s, _shift_dict(gj.full, qj), p)
        trace = None
        if want_traces:
            trace = _shift_dict(gi.trace, qi)
            _sub_into(trace, _shift_dict(gj.trace, qj), p)
        rem = _normal_form_dict(s, by_comp, keyf, p, cap, trace=trace)
        if rem:
            insert(rem, trace)
        elif want_traces and trace:
            syzygies.append(trace)

    if want_traces:
        for i, j in koszul_pairs:
            gi, gj = gels[i], gels[j]
            syz = _poly_times_trace(gj.full, gi.trace, p)
            _sub_into(syz, _poly_times_trace(gi.full, gj.trace, p), p)
            if syz:
                syzygies.append(syz)
    return gels, syzygies


def _interreduce(ring, gels, keyf, cap, want_traces):
    """Minimal lead set, then tail reduction: the reduced basis."""
    p = ring.p
    order_idx = sorted(range(len(gels)), key=lambda i: gels[i].key)
    kept: list[_Gel] = []
    for i in order_idx:
        g = gels[i]
        if any(
            h.lead[0] == g.lead[0] and mono_divides(h.lead[1], g.lead[1])
            for h in kept
        ):
            continue
        kept.append(g)
    out: list[_Gel] = []
    for g in kept:
        others: dict[int, list[_Gel]] = {}
        for h in kept:
            if h is not g:
                others.setdefault(h.lead[0], []).append(h)
        trace = dict(g.trace) if (want_traces and g.trace is not None) else None
        rem = _normal_form_dict(g.full, others, keyf, p, cap, trace=trace)
        out.append(_make_gel(ring, rem, keyf, g.index, trace))
    out.sort(key=lambda g: g.key)
    return out


@dataclass
class GroebnerBasis:
    """Reduced Groebner basis, monic elements sorted by ascending lead."""

    ring: Ring
    shape: FreeModuleShape
    order: object  # MonomialOrder for rank 1, ModuleOrder otherwise
    elements: tuple
    expressions: tuple | None = None  # per element, over the input generators

    @property
    def rank1(self) -> bool:
        return isinstance(self.order, MonomialOrder)

    def term_key(self):
        if self.rank1:
            return RingOrderAdapter(self.order).key
        return self.order.key

    def lead_monomials(self) -> tuple:
        if self.rank1:
            return tuple(f.lead_monomial(self.order) for f in self.elements)
        keyf = self.order.key
        return tuple(max(z.terms, key=keyf) for z in self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def _resolve_order(ring: Ring, order) -> MonomialOrder:
    if order is None:
        return ring.grevlex
    if order.n != ring.nvars:
        raise RingMismatchError("order arity does not match the ring")
    return order


def _macaulay_engine(ring, twists, inputs, keyf, cap, coprime_skip):
    """Homogeneous basis completion by degreewise row reduction.

    inputs: (terms dict keyed by (component, monomial), module degree) pairs.
    Each outstanding degree assembles a matrix from just the S-pair multiples
    and same-degree inputs, then closes it under reduction symbolically: any
    occurring term divisible by a basis lead pulls in one shifted copy of
    that basis element as a row.  The echelon form then reduces every S-pair
    of the degree in one pass, and a pivot at a column no basis lead divides
    is a genuinely new lead.  S-pair degrees are queued so no degree with
    outstanding pairs is skipped, which is the Buchberger termination
    argument; pairs live only between leads in the same component, and the
    coprime-lead shortcut is only sound in rank one.
    """
    p = ring.p
    by_deg: dict[int, list[dict]] = {}
    for terms, d in inputs:
        by_deg.setdefault(d, []).append(terms)
    pending = set(by_deg)
    basis: list[tuple[Term, dict, int]] = []  # (lead term, terms, degree)
    pairs: dict[int, set[tuple[int, int]]] = {}

    def queue_pairs(j):
        cj, mj = basis[j][0]
        for i in range(j):
            ci, mi = basis[i][0]
            if ci != cj:
                continue
            lcm = mono_lcm(mi, mj)
            if coprime_skip and lcm == mono_mul(mi, mj):
                continue  # coprime leads settle their S-pair for free
            e = mono_degree(lcm) + twists[cj]
            pairs.setdefault(e, set()).add((i, j))
            pending.add(e)

    while pending:
        e = min(pending)
        pending.discard(e)
        if e > cap:
            raise DegreeCapExceeded(
                f"outstanding S-pair degree {e} passed the cap {cap}", cap=cap
            )
        seeds = [dict(t) for t in by_deg.get(e, ())]
        mults = set()
        for i, j in pairs.pop(e, ()):
            mi, mj = basis[i][0][1], basis[j][0][1]
            lcm = mono_lcm(mi, mj)
            mults.add((i, tuple(a - b for a, b in zip(lcm, mi))))
            mults.add((j, tuple(a - b for a, b in zip(lcm, mj))))
        for idx, q in mults:
            seeds.append(
                {(tc, mono_mul(tm, q)): c for (tc, tm), c in basis[idx][1].items()}
            )
        if not seeds:
            continue
        occurring = set()
        reducers = []
        stack = [t for row in seeds for t in row]
        while stack:
            t = stack.pop()
            if t in occurring:
                continue
            occurring.add(t)
            tc, tm = t
            for bidx, ((bc, bm), terms, _) in enumerate(basis):
                if bc != tc or not mono_divides(bm, tm):
                    continue
                q = tuple(a - b for a, b in zip(tm, bm))
                if (bidx, q) not in mults:
                    row = {(rc, mono_mul(rm, q)): c for (rc, rm), c in terms.items()}
                    reducers.append(row)
                    stack.extend(row)
                break
        cols = sorted(occurring, key=keyf, reverse=True)
        col = {t: i for i, t in enumerate(cols)}
        all_rows = seeds + reducers
        mat = np.zeros((len(all_rows), len(cols)), dtype=np.int64)
        for k, row in enumerate(all_rows):
            for t, c in row.items():
                mat[k, col[t]] = c
        R, piv = linalg.rref(mat, p)
        for r, cidx in enumerate(piv):
            lead = cols[cidx]
            lc, lm = lead
            if any(
                bc == lc and mono_divides(bm, lm) for (bc, bm), _, _ in basis
            ):
                continue
            terms = {cols[k]: int(v) for k, v in enumerate(R[r]) if v}
            basis.append((lead, terms, e))
            queue_pairs(len(basis) - 1)
    return basis


def macaulay_gb(gens, order=None, cap: int = DEFAULT_DEGREE_CAP) -> GroebnerBasis:
    """Reduced basis of a homogeneous ideal by degreewise row reduction.

    Valid for any global order because a homogeneous ideal is the direct sum
    of its graded pieces: the echelon form of a degree-e matrix, columns
    sorted by descending order key, exposes the lead monomials achievable
    from its rows.
    """
    gens = [f for f in gens if f]
    if not gens:
        raise ValueError("need at least one nonzero generator")
    ring = gens[0].ring
    order = _resolve_order(ring, order)
    for f in gens:
        if f.ring != ring:
            raise RingMismatchError("generators over different rings")
        if not f.is_homogeneous():
            raise ValueError("macaulay_gb needs homogeneous input")

    keyf = RingOrderAdapter(order).key
    inputs = [
        ({(0, m): c for m, c in f.terms.items()}, f.homogeneous_degree())
        for f in gens
    ]
    basis = _macaulay_engine(ring, (0,), inputs, keyf, cap, coprime_skip=True)
    gels = [
        _make_gel(ring, dict(terms), keyf, i, None)
        for i, (_, terms, _) in enumerate(basis)
    ]
    gels = _interreduce(ring, gels, keyf, cap, want_traces=False)
    elements = tuple(_dict_to_poly(ring, g.full) for g in gels)
    return GroebnerBasis(ring, FreeModuleShape.plain(1), order, elements)


def macaulay_module_gb(gens, order=None, cap: int = DEFAULT_DEGREE_CAP) -> GroebnerBasis:
    """Reduced basis of a homogeneous submodule by degreewise row reduction."""
    gens = [z for z in gens if z]
    if not gens:
        raise ValueError("need at least one nonzero generator")
    ring = gens[0].ring
    shape = gens[0].shape
    for z in gens:
        if z.ring != ring or z.shape != shape:
            raise RingMismatchError("module generators disagree on shape")
        if not z.is_homogeneous():
            raise ValueError("macaulay_module_gb needs homogeneous input")
    if order is None:
        order = PositionOverTerm(ring.grevlex, shape.rank)
    keyf = order.key

    inputs = [(dict(z.terms), z.module_degree()) for z in gens]
    basis = _macaulay_engine(
        ring, shape.twists, inputs, keyf, cap, coprime_skip=False
    )
    gels = [
        _make_gel(ring, dict(terms), keyf, i, None)
        for i, (_, terms, _) in enumerate(basis)
    ]
    gels = _interreduce(ring, gels, keyf, cap, want_traces=False)
    elements = tuple(ModuleElement(ring, shape, g.full) for g in gels)
    return GroebnerBasis(ring, shape, order, elements)


def buchberger(
    gens,
    order=None,
    cap: int = DEFAULT_DEGREE_CAP,
    want_expressions: bool = False,
) -> GroebnerBasis:
    """Reduced basis by Buchberger's algorithm; the general-purpose path."""
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    if isinstance(gens[0], ModuleElement):
        return _module_groebner(gens, order, cap, want_expressions)[0]
    ring = gens[0].ring
    order = _resolve_order(ring, order)
    for f in gens:
        if f.ring != ring:
            raise RingMismatchError("generators over different rings")
    keyf = RingOrderAdapter(order).key
    dicts = [_poly_to_dict(f) for f in gens]
    gels, _ = _buchberger_engine(ring, dicts, keyf, cap, True, want_expressions)
    gels = _interreduce(ring, gels, keyf, cap, want_expressions)
    elements = tuple(_dict_to_poly(ring, g.full) for g in gels)
    expressions = None
    if want_expressions:
        shape = FreeModuleShape.plain(len(gens))
        expressions = tuple(
            ModuleElement(ring, shape, dict(g.trace)) for g in gels
        )
    return GroebnerBasis(
        ring, FreeModuleShape.plain(1), order, elements, expressions
    )


def groebner_basis(gens, order=None, cap: int = DEFAULT_DEGREE_CAP) -> GroebnerBasis:
    """Reduced Groebner basis; dispatches to the fastest valid engine."""
    gens = list(gens)
    if gens and isinstance(gens[0], ModuleElement):
        return _module_groebner(gens, order, cap, False)[0]
    live = [f for f in gens if f]
    if live and all(f.is_homogeneous() for f in live):
        return macaulay_gb(live, order, cap)
    return buchberger(gens, order, cap)


def _module_groebner(gens, order, cap, want_expressions):
    gens = list(gens)
    shape = gens[0].shape
    ring = gens[0].ring
    for z in gens:
        if z.shape != shape or z.ring != ring:
            raise RingMismatchError("module generators disagree on shape")
    if order is None:
        order = PositionOverTerm(ring.grevlex, shape.rank)
    if not want_expressions:
        live = [z for z in gens if z]
        if live and all(z.is_homogeneous() for z in live):
            return macaulay_module_gb(live, order, cap), None
    keyf = order.key
    dicts = [dict(z.terms) for z in gens]
    gels, syz = _buchberger_engine(
        ring, dicts, keyf, cap, False, want_expressions
    )
    gels = _interreduce(ring, gels, keyf, cap, want_expressions)
    elements = tuple(ModuleElement(ring, shape, g.full) for g in gels)
    expressions = None
    if want_expressions:
        tshape = FreeModuleShape.plain(len(gens))
        expressions = tuple(
            ModuleElement(ring, tshape, dict(g.trace)) for g in gels
        )
    return GroebnerBasis(ring, shape, order, elements, expressions), syz


def normal_form(f, gb: GroebnerBasis, cap: int | None = None):
    """Remainder of f on full division by the basis."""
    ring = gb.ring
    keyf = gb.term_key()
    if cap is None:
        cap = DEFAULT_DEGREE_CAP * 8
    if isinstance(f, Polynomial):
        if not gb.rank1:
            raise RingMismatchError("polynomial against a module basis")
        if f.ring != ring:
            raise RingMismatchError("polynomial over a different ring")
        d = _poly_to_dict(f)
        src = [_poly_to_dict(g) for g in gb.elements]
    else:
        if f.ring != ring or f.shape != gb.shape:
            raise RingMismatchError("element does not match the basis module")
        d = dict(f.terms)
        src = [dict(z.terms) for z in gb.elements]
    by_comp: dict[int, list[_Gel]] = {}
    for i, gd in enumerate(src):
        g = _make_gel(ring, gd, keyf, i, None)
        by_comp.setdefault(g.lead[0], []).append(g)
    rem = _normal_form_dict(d, by_comp, keyf, ring.p, cap)
    if isinstance(f, Polynomial):
        return _dict_to_poly(ring, rem)
    return ModuleElement(ring, gb.shape, rem)


def reduces_to_zero(f, gb: GroebnerBasis) -> bool:
    return not normal_form(f, gb)


# ---------------------------------------------------------------------------
# Graded pieces and minimal generators


def module_monomials(ring: Ring, shape: FreeModuleShape, degree: int):
    """Module monomials of the given degree: component asc, monomial desc."""
    order = ring.grevlex
    out: list[Term] = []
    for comp in range(shape.rank):
        d = degree - shape.twists[comp]
        if d < 0:
            continue
        monos = sorted(ring.monomials_of_degree(d), key=order.key, reverse=True)
        out.extend((comp, m) for m in monos)
    return out


def graded_piece_rows(ring, shape, elements, degree):
    """Rows spanning the degree-d slice of the span of the elements.

    elements: iterable of (terms dict, module degree) pairs.  Returns
    (matrix, columns) with columns the module monomials indexing the matrix.
    """
    cols = module_monomials(ring, shape, degree)
    col = {t: i for i, t in enumerate(cols)}
    rows = []
    for terms, d in elements:
        q = degree - d
        if q < 0:
            continue
        for g in ring.monomials_of_degree(q):
            row = np.zeros(len(cols), dtype=np.int64)
            for (tc, tm), c in terms.items():
                row[col[(tc, mono_mul(tm, g))]] = c
            rows.append(row)
    if rows:
        mat = np.vstack(rows)
    else:
        mat = np.zeros((0, len(cols)), dtype=np.int64)
    return mat, cols


def _element_vector(terms: dict, col: dict, p: int):
    row = np.zeros(len(col), dtype=np.int64)
    for t, c in terms.items():
        row[col[t]] = c % p
    return row


def minimal_module_generators(elements, shape=None):
    """Minimal generating subset of a list of homogeneous elements.

    Degreewise: an element is redundant iff it lies in the span of the
    monomial multiples of the survivors of lower or equal degree.  Input can
    be Polynomials (rank 1) or ModuleElements over one shape.
    """
    elements = [z for z in elements if z]
    if not elements:
        return []
    if isinstance(elements[0], Polynomial):
        ring = elements[0].ring
        if shape is None:
            shape = FreeModuleShape.plain(1)
        triples = [(_poly_to_dict(f), f.homogeneous_degree(), f) for f in elements]
    else:
        ring = elements[0].ring
        shape = elements[0].shape
        triples = [(dict(z.terms), z.module_degree(), z) for z in elements]
    p = ring.p
    triples.sort(key=lambda t: t[1])
    kept: list[tuple[dict, int, object]] = []
    for deg in sorted({d for _, d, _ in triples}):
        mat, cols = graded_piece_rows(
            ring, shape, [(t, d) for t, d, _ in kept], deg
        )
        R, piv = linalg.rref(mat, p)
        col = {t: i for i, t in enumerate(cols)}
        for terms, d, obj in triples:
            if d != deg:
                continue
            v = _element_vector(terms, col, p).reshape(1, -1)
            v = linalg.reduce_rows(R, piv, v, p)
            if not v.any():
                continue
            kept.append((terms, d, obj))
            R, piv = linalg.rref(np.vstack([R, v]) if R.shape[0] else v, p)
    return [obj for _, _, obj in kept]


# ---------------------------------------------------------------------------
# Syzygies


def syzygy_generators(gens, order=None, cap: int = DEFAULT_DEGREE_CAP):
    """Generators of the syzygy module of the given generator list.

    Traced Buchberger run: the expression of every S-pair that reduces to
    zero is a syzygy of the run basis, and since every nonzero input is kept
    in the run basis with a unit trace those expressions live over the inputs
    directly.  Product-criterion skips contribute their Koszul relations, so
    the union generates.  Homogeneous input gets pruned to a minimal set and
    sorted; inhomogeneous input is returned as collected.
    """
    gens = list(gens)
    if not gens:
        return []
    if isinstance(gens[0], ModuleElement):
        ring = gens[0].ring
        _, syz = _module_groebner(gens, order, cap, True)
        twists = tuple(
            (z.module_degree() or 0) if z.is_homogeneous() else 0 for z in gens
        )
    else:
        ring = gens[0].ring
        order = _resolve_order(ring, order)
        keyf = RingOrderAdapter(order).key
        dicts = [_poly_to_dict(f) for f in gens]
        _, syz = _buchberger_engine(ring, dicts, keyf, cap, True, True)
        twists = tuple(
            f.homogeneous_degree() if (f and f.is_homogeneous()) else 0
            for f in gens
        )
    tshape = FreeModuleShape(len(gens), twists)
    out = [ModuleElement(ring, tshape, d) for d in syz if d]
    if out and all(z.is_homogeneous() for z in out):
        out = minimal_module_generators(out)
        key_order = PositionOverTerm(ring.grevlex, tshape.rank)
        out.sort(
            key=lambda z: (z.module_degree(), sorted(map(key_order.key, z.terms)))
        )
    return out
