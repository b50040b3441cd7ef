"""From-first-principles depth oracle: reduced simplicial homology over a
prime field, multigraded Betti numbers via upper Koszul subcomplexes at
lcm-lattice degrees, and depth through Auslander-Buchsbaum (depth = n - pd).

This path shares no code with the combinatorial depth criteria, so the two
can audit each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .complexes import SimplicialComplex
from .ideals import MonomialIdeal, Monomial, mono_lcm

DEFAULT_PRIME = 32003


def gf_rank(mat: np.ndarray, p: int) -> int:
    """Rank over GF(p) by Gaussian elimination (entries reduced mod p)."""
    a = np.array(mat, dtype=np.int64) % p
    rows, cols = a.shape
    rank = 0
    for c in range(cols):
        pivot = None
        for r in range(rank, rows):
            if a[r, c] % p:
                pivot = r
                break
        if pivot is None:
            continue
        a[[rank, pivot]] = a[[pivot, rank]]
        inv = pow(int(a[rank, c]), p - 2, p)
        a[rank] = a[rank] * inv % p
        for r in range(rows):
            if r != rank and a[r, c]:
                a[r] = (a[r] - a[r, c] * a[rank]) % p
        rank += 1
        if rank == rows:
            break
    return rank


@dataclass(frozen=True)
class ChainComplexRanks:
    """Reduced homology ranks by dimension (dimension -1 included)."""

    ranks: tuple[tuple[int, int], ...]

    def rank(self, dim: int) -> int:
        return dict(self.ranks).get(dim, 0)

    def total(self) -> int:
        return sum(r for _, r in self.ranks)

    def top_nonzero(self) -> int | None:
        nz = [d for d, r in self.ranks if r]
        return max(nz) if nz else None


def reduced_homology(c: SimplicialComplex, p: int = DEFAULT_PRIME) -> ChainComplexRanks:
    """Reduced homology ranks over GF(p) from boundary-matrix ranks.

    The empty face spans the (-1)-chains, so the irrelevant complex has
    rank 1 in dimension -1 and the void complex has no homology at all.
    """
    if c.is_void:
        return ChainComplexRanks(())
    faces_by_dim: dict[int, list[tuple[int, ...]]] = {}
    for f in c.faces():
        faces_by_dim.setdefault(len(f) - 1, []).append(tuple(sorted(f)))
    top = max(faces_by_dim)
    for d in faces_by_dim:
        faces_by_dim[d].sort()
    index = {d: {f: i for i, f in enumerate(fs)} for d, fs in faces_by_dim.items()}

    def boundary(d: int) -> np.ndarray:
        """Map from d-chains to (d-1)-chains."""
        rows = len(faces_by_dim.get(d - 1, []))
        cols = len(faces_by_dim.get(d, []))
        mat = np.zeros((rows, cols), dtype=np.int64)
        for j, f in enumerate(faces_by_dim.get(d, [])):
            for k in range(len(f)):
                sub = f[:k] + f[k + 1 :]
                mat[index[d - 1][sub], j] = (-1) ** k
        return mat

    rank_bd = {d: gf_rank(boundary(d), p) for d in range(0, top + 1)}
    rank_bd[top + 1] = 0
    out = []
    for d in range(-1, top + 1):
        dim_chains = len(faces_by_dim.get(d, []))
        h = dim_chains - rank_bd.get(d, 0) - rank_bd.get(d + 1, 0)
        out.append((d, h))
    return ChainComplexRanks(tuple(out))


def lcm_lattice(J: MonomialIdeal) -> list[Monomial]:
    """All joins of nonempty generator subsets, via closure under pairwise lcm."""
    points: set[Monomial] = set(J.gens)
    frontier = set(J.gens)
    while frontier:
        nxt = set()
        for a in frontier:
            for g in J.gens:
                m = mono_lcm(a, g)
                if m not in points:
                    points.add(m)
                    nxt.add(m)
        frontier = nxt
    return sorted(points)


_koszul_homology_cache: dict[tuple[int, frozenset], ChainComplexRanks] = {}


def upper_koszul_complex(J: MonomialIdeal, a: Monomial) -> SimplicialComplex:
    """Faces are the squarefree S with x^(a - chi_S) still inside J."""
    n = J.nvars
    support = [i for i in range(n) if a[i] > 0]
    faces = []
    for k in range(len(support) + 1):
        for combo in combinations(support, k):
            b = list(a)
            for i in combo:
                b[i] -= 1
            if J.contains(tuple(b)):
                faces.append(frozenset(i + 1 for i in combo))
    return SimplicialComplex.make(n, faces)


def betti_numbers(J: MonomialIdeal, p: int = DEFAULT_PRIME) -> dict:
    """Multigraded Betti numbers of R/J: map (i, a) -> rank, with (0, 0) -> 1.

    beta_{i,a}(R/J) for i >= 1 is the reduced homology of the upper Koszul
    complex of J at a in dimension i-2; only lcm-lattice degrees contribute.
    """
    if J.is_zero:
        raise ValueError("Betti numbers of R/0 are trivial; ideal must be nonzero")
    out = {(0, tuple([0] * J.nvars)): 1}
    for a in lcm_lattice(J):
        complex_a = upper_koszul_complex(J, a)
        key = (p, complex_a.n, frozenset(complex_a.facets))
        ranks = _koszul_homology_cache.get(key)
        if ranks is None:
            ranks = reduced_homology(complex_a, p)
            _koszul_homology_cache[key] = ranks
        for d, r in ranks.ranks:
            if r:
                out[(d + 2, a)] = r
    return out


def projective_dimension(J: MonomialIdeal, p: int = DEFAULT_PRIME) -> int:
    return max(i for i, _ in betti_numbers(J, p))


def depth_oracle(J: MonomialIdeal, p: int = DEFAULT_PRIME) -> int:
    """depth R/J = nvars - pd(R/J) (Auslander-Buchsbaum)."""
    return J.nvars - projective_dimension(J, p)
