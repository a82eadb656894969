"""Z2 homology and cohomology of cubical complexes, with cup products.

The cup product is the Serre diagonal on directed cubes: on a cube with
direction set D,

    (a cup b)(Q) = sum over |A| = p of a(front face spanned by A) * b(back face spanned by D-A)

where "front" fixes the remaining directions at 0 and "back" at 1.  The
formula reads each cube in its own frame, so it is a cochain map only when
facets are glued without reflections.  ``cup_class`` therefore computes
classes on non-strict complexes through the cubical subdivision, which is
always strict, and pulls the answer back along the subdivision chain map.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import reduce
from typing import Iterable

from . import gf2la
from .cubecore import (
    ComplexError,
    CubicalComplex,
    boundary_matrix,
    check_quadrangulation,
    coboundary_matrix,
    cubical_subdivision,
)
from .gf2la import GF2Matrix, GF2Vector


def _check_degree(complex: CubicalComplex, k: int) -> None:
    if not 0 <= k <= complex.dimension:
        raise ComplexError(f"degree {k} outside 0..{complex.dimension}")


@dataclass(frozen=True, eq=False)
class _Z2Cells:
    complex: CubicalComplex
    degree: int
    support: frozenset

    def __post_init__(self):
        _check_degree(self.complex, self.degree)
        bad = [c for c in self.support if not self.complex.has(self.degree, c)]
        if bad:
            raise ComplexError(f"not {self.degree}-cells: {sorted(bad)[:5]}")

    @classmethod
    def from_ids(cls, complex: CubicalComplex, degree: int, ids: Iterable[str]):
        """Build from a list of ids, cancelling repeats mod 2."""
        sup: set = set()
        for c in ids:
            sup ^= {c}
        return cls(complex, degree, frozenset(sup))

    @classmethod
    def zero(cls, complex: CubicalComplex, degree: int):
        return cls(complex, degree, frozenset())

    @classmethod
    def full(cls, complex: CubicalComplex, degree: int):
        return cls(complex, degree, frozenset(complex.ids(degree)))

    @classmethod
    def from_vector(cls, complex: CubicalComplex, degree: int, v: GF2Vector):
        ids = complex.ids(degree)
        return cls(complex, degree, frozenset(ids[j] for j in v.support()))

    def vector(self) -> GF2Vector:
        c = self.complex
        return GF2Vector.from_support(c.count(self.degree), (c.index(self.degree, x) for x in self.support))

    def _same(self, other) -> None:
        if other.complex is not self.complex or other.degree != self.degree:
            raise ComplexError("operands live on different complexes or degrees")

    def __add__(self, other):
        self._same(other)
        return type(self)(self.complex, self.degree, self.support ^ other.support)

    def __eq__(self, other):
        return (
            type(other) is type(self)
            and other.complex is self.complex
            and other.degree == self.degree
            and other.support == self.support
        )

    def __hash__(self):
        return hash((type(self).__name__, id(self.complex), self.degree, self.support))

    def __bool__(self):
        return bool(self.support)

    def __len__(self):
        return len(self.support)

    def value(self, cid: str) -> int:
        return int(cid in self.support)

    def as_dict(self) -> dict:
        order = self.complex.ids(self.degree)
        return {"degree": self.degree, "support": [c for c in order if c in self.support]}


class ChainZ2(_Z2Cells):
    """Z2 chain: a set of k-cells."""


class CochainZ2(_Z2Cells):
    """Z2 cochain: indicator functional on k-cells."""


# -- (co)boundary ---------------------------------------------------------------

def boundary(z: ChainZ2) -> ChainZ2:
    k = z.degree
    if k == 0:
        return ChainZ2.zero(z.complex, 0)
    facets = [f for c in z.support for f in z.complex.cell(k, c).facets]
    return ChainZ2.from_ids(z.complex, k - 1, facets)


def coboundary(a: CochainZ2) -> CochainZ2:
    """delta a = a composed with the boundary, on (k+1)-cells."""
    X, k = a.complex, a.degree
    if k >= X.dimension:
        raise ComplexError(f"coboundary of a top-degree ({k}) cochain")
    vec = coboundary_matrix(X, k).matvec(a.vector())
    return CochainZ2.from_vector(X, k + 1, vec)


def is_cycle(z: ChainZ2) -> bool:
    return not boundary(z)


def is_cocycle(a: CochainZ2) -> bool:
    if a.degree == a.complex.dimension:
        return True
    return not coboundary(a)


def is_boundary(z: ChainZ2) -> bool:
    X, k = z.complex, z.degree
    if not z:
        return True
    if k == X.dimension:
        return False
    return gf2la.solve(boundary_matrix(X, k + 1), z.vector()) is not None


def is_coboundary(a: CochainZ2) -> bool:
    X, k = a.complex, a.degree
    if not a:
        return True
    if k == 0:
        return False
    return gf2la.solve(coboundary_matrix(X, k - 1), a.vector()) is not None


def class_is_nontrivial(a: CochainZ2) -> bool:
    if not is_cocycle(a):
        raise ComplexError("class_is_nontrivial needs a cocycle")
    return not is_coboundary(a)


def pairing(a: CochainZ2, z: ChainZ2) -> int:
    if a.complex is not z.complex or a.degree != z.degree:
        raise ComplexError("pairing needs a cochain and a chain of equal degree on one complex")
    return len(a.support & z.support) & 1


def fundamental_chain(complex: CubicalComplex) -> ChainZ2:
    return ChainZ2.full(complex, complex.dimension)


# -- Betti numbers and bases -------------------------------------------------

def betti_numbers(complex: CubicalComplex) -> tuple[int, ...]:
    """Z2 Betti numbers from boundary ranks."""
    d = complex.dimension
    ranks = [0] + [gf2la.rank(boundary_matrix(complex, k)) for k in range(1, d + 1)] + [0]
    return tuple(complex.count(k) - ranks[k] - ranks[k + 1] for k in range(d + 1))


def cohomology_betti_numbers(complex: CubicalComplex) -> tuple[int, ...]:
    """Same numbers computed from coboundary kernels (independent route)."""
    d = complex.dimension
    out = []
    for k in range(d + 1):
        z = len(gf2la.kernel_basis(coboundary_matrix(complex, k))) if k < d else complex.count(k)
        b = gf2la.rank(coboundary_matrix(complex, k - 1)) if k > 0 else 0
        out.append(z - b)
    return tuple(out)


@dataclass
class CohomologyBasis:
    degree: int
    classes: list[CochainZ2]

    def __len__(self):
        return len(self.classes)

    def span(self) -> list[tuple[tuple[int, ...], CochainZ2]]:
        """Every nonzero class of the span with its coefficient vector."""
        out = []
        n = len(self.classes)
        for coeffs in itertools.product((0, 1), repeat=n):
            if not any(coeffs):
                continue
            terms = [c for c, e in zip(self.classes, coeffs) if e]
            out.append((coeffs, reduce(lambda x, y: x + y, terms)))
        return out


def cohomology_basis(complex: CubicalComplex, k: int) -> CohomologyBasis:
    """Cocycles from ``kernel_basis(delta_k)`` kept greedily modulo coboundaries."""
    _check_degree(complex, k)
    n = complex.count(k)
    if k < complex.dimension:
        cocycles = gf2la.kernel_basis(coboundary_matrix(complex, k))
    else:
        cocycles = [GF2Vector(n, 1 << j) for j in range(n)]
    if k > 0:
        dprev = coboundary_matrix(complex, k - 1)
        coboundaries = [dprev.column(j) for j in range(dprev.cols)]
    else:
        coboundaries = []
    keep = gf2la.independent_modulo(coboundaries, cocycles)
    return CohomologyBasis(k, [CochainZ2.from_vector(complex, k, cocycles[i]) for i in keep])


def homology_basis(complex: CubicalComplex, k: int) -> list[ChainZ2]:
    _check_degree(complex, k)
    n = complex.count(k)
    cycles = (
        gf2la.kernel_basis(boundary_matrix(complex, k)) if k > 0
        else [GF2Vector(n, 1 << j) for j in range(n)]
    )
    if k < complex.dimension:
        dnext = boundary_matrix(complex, k + 1)
        bounds = [dnext.column(j) for j in range(dnext.cols)]
    else:
        bounds = []
    keep = gf2la.independent_modulo(bounds, cycles)
    return [ChainZ2.from_vector(complex, k, cycles[i]) for i in keep]


# -- cup products -----------------------------------------------------------------

def _cup_terms(n: int, p: int) -> list[tuple[tuple, tuple]]:
    """(front pattern, back pattern) pairs of the Serre diagonal on an n-cube."""
    terms = []
    for A in itertools.combinations(range(n), p):
        front = tuple(None if i in A else 0 for i in range(n))
        back = tuple(1 if i in A else None for i in range(n))
        terms.append((front, back))
    return terms


def cup_product(a: CochainZ2, b: CochainZ2) -> CochainZ2:
    """Cochain-level cup product, each cube read in its own frame."""
    X = a.complex
    if b.complex is not X:
        raise ComplexError("cup product of cochains on different complexes")
    p, q = a.degree, b.degree
    n = p + q
    if n > X.dimension:
        raise ComplexError(f"degree overflow: {p} + {q} > {X.dimension}")
    terms = _cup_terms(n, p)
    out = []
    for Q in X.level(n):
        val = 0
        for front, back in terms:
            if X.face(n, Q.id, front) in a.support and X.face(n, Q.id, back) in b.support:
                val ^= 1
        if val:
            out.append(Q.id)
    return CochainZ2(X, n, frozenset(out))


def subdivision_pullback(sub, a_sd: CochainZ2) -> CochainZ2:
    """Dual of the subdivision chain map: cochain on sd X -> cochain on X."""
    X = sub.source
    k = a_sd.degree
    out = [
        c.id for c in X.level(k)
        if sum(1 for s in sub.chain_map[k][c.id] if s in a_sd.support) & 1
    ]
    return CochainZ2(X, k, frozenset(out))


def lift_to_subdivision(a: CochainZ2) -> CochainZ2:
    """A cocycle on sd X whose pullback is cohomologous to the cocycle ``a``."""
    X, k = a.complex, a.degree
    if not is_cocycle(a):
        raise ComplexError("only cocycles can be lifted")
    sub = cubical_subdivision(X)
    S = sub.complex
    nsd = S.count(k)
    # S^T restricted to degree k: rows X k-cells, cols sd k-cells
    cols_of = [[] for _ in range(nsd)]
    for c in X.level(k):
        i = X.index(k, c.id)
        for s in sub.chain_map[k][c.id]:
            cols_of[S.index(k, s)].append(i)
    pull = GF2Matrix.from_columns(X.count(k), cols_of)
    if k > 0:
        pull = pull.hstack(coboundary_matrix(X, k - 1))
    if k < S.dimension:
        dsd = coboundary_matrix(S, k)
        pad = GF2Matrix.zeros(dsd.rows, pull.cols - nsd)
        system = dsd.hstack(pad).vstack(pull)
        rhs_bits = a.vector().bits << dsd.rows
        rhs = GF2Vector(system.rows, rhs_bits)
    else:
        system = pull
        rhs = a.vector()
    x = gf2la.solve(system, rhs)
    if x is None:
        raise ComplexError("cocycle could not be lifted to the subdivision")
    sd_bits = x.bits & ((1 << nsd) - 1)
    return CochainZ2.from_vector(S, k, GF2Vector(nsd, sd_bits))


def cup_class(a: CochainZ2, b: CochainZ2) -> CochainZ2:
    """A cocycle representing ``[a] cup [b]`` for cocycles ``a``, ``b``.

    Strict complexes use :func:`cup_product` directly; otherwise both classes
    are lifted to the subdivision, multiplied there, and pulled back.
    """
    X = a.complex
    if not (is_cocycle(a) and is_cocycle(b)):
        raise ComplexError("cup_class needs cocycles")
    if X.is_strict:
        return cup_product(a, b)
    if a.degree + b.degree > X.dimension:
        raise ComplexError(f"degree overflow: {a.degree} + {b.degree} > {X.dimension}")
    sub = cubical_subdivision(X)
    return subdivision_pullback(sub, cup_product(lift_to_subdivision(a), lift_to_subdivision(b)))


def cup_power(w: CochainZ2, n: int) -> CochainZ2:
    """Representative of ``[w]**n`` (n >= 1)."""
    if n < 1:
        raise ValueError("power must be positive")
    out = w
    for _ in range(n - 1):
        out = cup_class(out, w)
    return out


def top_class_nonzero(a: CochainZ2) -> bool:
    """Top-degree test by evaluation on the fundamental cycle."""
    X = a.complex
    if a.degree != X.dimension:
        raise ComplexError("evaluation on the fundamental class needs a top-degree cochain")
    z = fundamental_chain(X)
    if not is_cycle(z):
        raise ComplexError("sum of top cells is not a cycle")
    return bool(pairing(a, z))


@dataclass
class RingConditions:
    cond1: bool
    cond2: bool
    h1_rank: int
    h2_rank: int
    h_dm2_rank: int
    details: dict

    def as_dict(self) -> dict:
        return {
            "cond1": self.cond1,
            "cond2": self.cond2,
            "h1_rank": self.h1_rank,
            "h2_rank": self.h2_rank,
            "h_dm2_rank": self.h_dm2_rank,
            **self.details,
        }


def ring_conditions(complex: CubicalComplex) -> RingConditions:
    """Decide both cohomology-ring hypotheses for the 3-colouring obstruction.

    cond1: every nonzero class in degree d-2 cups nontrivially with some
    degree-2 class.  cond2: every two nonzero degree-1 classes have a
    nonzero cup.  Classes are enumerated over the full Z2 span.
    """
    d = complex.dimension
    qr = check_quadrangulation(complex)
    if d < 2 or not qr.closed_pseudomanifold:
        raise ComplexError("ring conditions need a closed pseudo-manifold of dimension >= 2")
    h1 = cohomology_basis(complex, 1)
    h2 = cohomology_basis(complex, 2)
    hd2 = cohomology_basis(complex, d - 2)

    failures1 = []
    for coeffs, alpha in hd2.span():
        if not any(class_is_nontrivial(cup_class(alpha, beta)) for beta in h2.classes):
            failures1.append(list(coeffs))
    failures2 = []
    for (ca, alpha), (cb, beta) in itertools.product(h1.span(), repeat=2):
        if not class_is_nontrivial(cup_class(alpha, beta)):
            failures2.append([list(ca), list(cb)])
    return RingConditions(
        cond1=not failures1,
        cond2=not failures2,
        h1_rank=len(h1),
        h2_rank=len(h2),
        h_dm2_rank=len(hd2),
        details={"cond1_failures": failures1, "cond2_failures": failures2[:10]},
    )
