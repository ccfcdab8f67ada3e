"""Right Groebner bases of submodules of A^m.

For a set ``S`` of basis vectors whose leading monomials share an index,
``X_S`` is the componentwise maximum of their exponents and
``gamma_i = X_S - beta_i``.  A right syzygy ``b`` of the row
``(lc(g_i) c_{beta_i, gamma_i})_i`` gives the S-vector

    sum_i g_i psi^{-1}_{beta_i, gamma_i}(b_i) x^{gamma_i}

whose leading terms cancel.  The completion loop adds reduced nonzero
remainders of S-vectors over every new subset until nothing changes.
No pair criteria are used: every admissible subset is examined.
"""

from dataclasses import dataclass, field
from itertools import combinations

from .algebra import Vec
from .division import as_vectors, divide, is_reducible
from .order import DEFAULT_ORDER, leading

__all__ = ["SubsetData", "subset_data", "b_set", "s_vector", "groebner", "is_groebner",
           "member", "trim", "GroebnerResult", "Provenance", "GBCheck", "Membership",
           "SubsetCapExceeded", "BasisCapExceeded"]


class SubsetCapExceeded(RuntimeError):
    """An admissible subset larger than the configured cap had to be examined."""


class BasisCapExceeded(SubsetCapExceeded):
    """The basis grew beyond the configured number of elements."""


@dataclass(frozen=True)
class SubsetData:
    """Indices into the basis, the lcm ``X_S`` (or ``None``) and the exponents."""

    indices: tuple
    X: tuple          # (exponent, index) or None when the indices differ
    betas: tuple
    gammas: tuple
    row: tuple        # lc(g_i) c_{beta_i, gamma_i}


def subset_data(G, indices, spec=DEFAULT_ORDER, leads=None):
    G = list(G)
    alg = G[0].alg
    leads = leads or [leading(g, spec) for g in G]
    ls = [leads[i] for i in indices]
    if len({l.index for l in ls}) != 1:
        return SubsetData(tuple(indices), None, (), (), ())
    X = tuple(max(col) for col in zip(*(l.lm for l in ls)))
    betas = tuple(l.lm for l in ls)
    gammas = tuple(tuple(x - b for x, b in zip(X, be)) for be in betas)
    row = tuple(l.lc * alg.c(be, ga) for l, be, ga in zip(ls, betas, gammas))
    return SubsetData(tuple(indices), (X, ls[0].index), betas, gammas, row)


def b_set(S, ring):
    """Generators of the right syzygies of the twisted leading-coefficient row."""
    if S.X is None:
        return []
    return [tuple(b) for b in ring.right_syzygies(list(S.row))]


def s_vector(G, S, b):
    G = list(G)
    alg = G[0].alg
    out = alg.zero_vector(G[0].m)
    for i, be, ga, bi in zip(S.indices, S.betas, S.gammas, b):
        if bi:
            out = out + G[i] * alg.monomial(ga, alg.psi_inv(be, ga, bi))
    return out


@dataclass
class Provenance:
    """How a basis element arose.

    Inputs have ``subset`` ``None``.  Otherwise the element equals
    ``(s_vector(subset, syzygy) - sum_j G[j] quotients[j]) * unit``
    where ``G`` is the basis at the moment of insertion.
    """

    subset: tuple = None
    syzygy: tuple = None
    quotients: list = None
    unit: object = None
    input_index: int = None


@dataclass
class GroebnerResult:
    basis: list
    provenance: list
    order: object = DEFAULT_ORDER
    generators: list = field(default_factory=list)

    def __iter__(self):
        return iter(self.basis)

    def __len__(self):
        return len(self.basis)

    def __getitem__(self, k):
        return self.basis[k]

    def replay(self, k):
        """Rebuild ``basis[k]`` from its provenance and earlier elements."""
        pv = self.provenance[k]
        if pv.subset is None:
            return self.generators[pv.input_index]
        alg = self.basis[0].alg
        S = subset_data(self.basis[:k], pv.subset, self.order)
        v = s_vector(self.basis[:k], S, pv.syzygy)
        for j, q in enumerate(pv.quotients):
            if q:
                v = v - self.basis[j] * q
        return v * alg.const(pv.unit)

    def combination(self, k, _memo=None):
        """Coefficients ``c`` with ``basis[k] = sum_j generators[j] c[j]``."""
        memo = {} if _memo is None else _memo
        if k in memo:
            return memo[k]
        alg = self.basis[0].alg
        pv = self.provenance[k]
        t = len(self.generators)
        if pv.subset is None:
            out = [alg.one if j == pv.input_index else alg.zero for j in range(t)]
        else:
            out = [alg.zero] * t
            S = subset_data(self.basis[:k], pv.subset, self.order)
            for i, be, ga, bi in zip(S.indices, S.betas, S.gammas, pv.syzygy):
                if bi:
                    m = alg.monomial(ga, alg.psi_inv(be, ga, bi))
                    out = [o + c * m for o, c in zip(out, self.combination(i, memo))]
            for j, q in enumerate(pv.quotients):
                if q:
                    out = [o - c * q for o, c in zip(out, self.combination(j, memo))]
            u = alg.const(pv.unit)
            out = [o * u for o in out]
        memo[k] = out
        return out


def _subsets(leads, new, cap):
    """Admissible subsets meeting ``new``, by size then lexicographically."""
    groups = {}
    for k, l in enumerate(leads):
        groups.setdefault(l.index, []).append(k)
    biggest = max((len(g) for g in groups.values() if new & set(g)), default=0)
    for size in range(1, biggest + 1):
        batch = []
        for g in groups.values():
            if len(g) < size or not new & set(g):
                continue
            if cap is not None and size > cap:
                raise SubsetCapExceeded(f"subset of size {size} exceeds the cap {cap}")
            batch.extend(c for c in combinations(g, size) if new & set(c))
        yield from sorted(batch)


def _make_monic(r, spec):
    alg = r.alg
    lr = leading(r, spec)
    if alg.ring.is_unit(lr.lc) and lr.lc != alg.ring.one:
        u = alg.sigma_pow_inv(lr.lm, alg.ring.inverse(lr.lc))
        return r * alg.const(u), u
    return r, alg.ring.one


def groebner(F, spec=DEFAULT_ORDER, max_subset=None, normalize=True, on_svector=None,
             max_basis=None):
    """Right Buchberger completion of ``F``.

    ``max_subset`` bounds the size of subsets examined and ``max_basis``
    the number of basis elements; exceeding either raises
    :class:`SubsetCapExceeded` rather than returning a partial basis.
    ``on_svector(S, b, s)`` is called for every S-vector (used by tests).
    """
    F = list(F)
    if not F:
        raise ValueError("need at least one generator")
    _, F = as_vectors(F[0], F)
    alg = F[0].alg
    basis = list(F)
    prov = [Provenance(input_index=k) for k in range(len(F))]
    done = 0
    while done < len(basis):
        new = set(range(done, len(basis)))
        done = len(basis)
        snapshot = [leading(g, spec) for g in basis[:done]]
        for idx in _subsets(snapshot, new, max_subset):
            S = subset_data(basis, idx, spec, snapshot)
            if S.X is None:
                continue
            for b in b_set(S, alg.ring):
                s = s_vector(basis, S, b)
                if on_svector is not None:
                    on_svector(S, b, s)
                if not s:
                    continue
                res = divide(s, basis, spec)
                r = res.remainder
                if not r:
                    continue
                u = alg.ring.one
                if normalize:
                    r, u = _make_monic(r, spec)
                if r in basis:
                    continue
                if max_basis is not None and len(basis) >= max_basis:
                    raise BasisCapExceeded(f"basis would exceed {max_basis} elements")
                basis.append(r)
                prov.append(Provenance(idx, b, res.quotients, u))
    return GroebnerResult(basis, prov, spec, F)


@dataclass
class GBCheck:
    ok: bool
    subset: tuple = None
    syzygy: tuple = None
    remainder: Vec = None

    def __bool__(self):
        return self.ok


def is_groebner(G, spec=DEFAULT_ORDER, max_subset=None):
    """True iff every S-vector of every admissible subset reduces to zero by ``G``."""
    G = list(G)
    _, G = as_vectors(G[0], G)
    alg = G[0].alg
    leads = [leading(g, spec) for g in G]
    for idx in _subsets(leads, set(range(len(G))), max_subset):
        S = subset_data(G, idx, spec, leads)
        if S.X is None:
            continue
        for b in b_set(S, alg.ring):
            s = s_vector(G, S, b)
            r = divide(s, G, spec).remainder
            if r:
                return GBCheck(False, idx, b, r)
    return GBCheck(True)


@dataclass
class Membership:
    is_member: bool
    quotients: list
    remainder: Vec

    def __bool__(self):
        return self.is_member


def member(f, G, spec=None):
    """Decide ``f`` in the module generated by a Groebner basis ``G``."""
    if isinstance(G, GroebnerResult):
        spec = spec or G.order
        G = G.basis
    spec = spec or DEFAULT_ORDER
    res = divide(f, list(G), spec)
    return Membership(not res.remainder, res.quotients, res.remainder)


def trim(G, spec=None):
    """Drop elements reducible by the others; the rest is still a Groebner basis."""
    if isinstance(G, GroebnerResult):
        spec = spec or G.order
        basis, gens = list(G.basis), G.generators
    else:
        basis = list(G)
        gens = list(G)
    spec = spec or DEFAULT_ORDER
    changed = True
    while changed and len(basis) > 1:
        changed = False
        for k in range(len(basis) - 1, -1, -1):
            rest = basis[:k] + basis[k + 1:]
            if is_reducible(basis[k], rest, spec) is not None:
                del basis[k]
                changed = True
                break
    # indices shift when elements go, so the trimmed basis carries no provenance
    return GroebnerResult(basis, [None] * len(basis), spec, gens)
