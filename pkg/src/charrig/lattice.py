"""Exact combinatorics of the type A_l weight lattice.

A weight is stored as a canonical epsilon-vector: an integer tuple of
length l+1 shifted so its minimum entry is 0.  Two tuples are equal iff
they name the same weight modulo the all-ones vector.  The Weyl group
(the symmetric group on l+1 letters) acts by permuting coordinates, so a
weight is dominant iff its canonical vector is weakly decreasing, and
Weyl orbits are multiset permutations.

All arithmetic is plain integer arithmetic; there is no rational Cartan
matrix inversion anywhere.
"""

import math
from collections import Counter
from itertools import permutations

Eps = tuple[int, ...]


class NotInRootLattice(ValueError):
    """The difference of the given weights is not in the root lattice."""


def canonical(v) -> Eps:
    """Shift so the minimum coordinate is 0."""
    m = min(v)
    return tuple(x - m for x in v)


def rank_of(eps: Eps) -> int:
    return len(eps) - 1


def zero_weight(l: int) -> Eps:
    return (0,) * (l + 1)


def fundamental_weight(l: int, i: int) -> Eps:
    """The i-th fundamental weight, 1 <= i <= l: i ones then zeros."""
    if not 1 <= i <= l:
        raise ValueError(f"fundamental index {i} out of range for A_{l}")
    return (1,) * i + (0,) * (l + 1 - i)


def from_fundamental(l: int, coords) -> Eps:
    """Weight with the given fundamental coordinates, in canonical form."""
    coords = tuple(coords)
    if len(coords) != l:
        raise ValueError(f"expected {l} fundamental coordinates, got {len(coords)}")
    eps = [0] * (l + 1)
    running = 0
    for j in range(l - 1, -1, -1):
        running += coords[j]
        eps[j] = running
    return canonical(tuple(eps))


def fundamental_coords(eps: Eps) -> tuple[int, ...]:
    """Fundamental coordinates c_i = eps_i - eps_{i+1} (shift-invariant)."""
    return tuple(eps[i] - eps[i + 1] for i in range(len(eps) - 1))


def is_dominant(eps: Eps) -> bool:
    return all(eps[i] >= eps[i + 1] for i in range(len(eps) - 1))


def dominant_representative(w: Eps) -> Eps:
    """The unique dominant point of the Weyl orbit of w."""
    return canonical(sorted(w, reverse=True))


def add(a: Eps, b: Eps) -> Eps:
    """Coset addition (well defined modulo the all-ones vector)."""
    if len(a) != len(b):
        raise ValueError("rank mismatch")
    return canonical(tuple(x + y for x, y in zip(a, b)))


def orbit(d: Eps) -> set[Eps]:
    """All distinct coordinate permutations (each still canonical)."""
    return set(permutations(d))


def orbit_size(d: Eps) -> int:
    n = math.factorial(len(d))
    for c in Counter(d).values():
        n //= math.factorial(c)
    return n


def aligned(a: Eps, b: Eps) -> tuple[Eps, Eps]:
    """Shift one representative by a multiple of the all-ones vector so
    both have the same coordinate sum.

    Raises NotInRootLattice when the sums are incongruent mod l+1,
    i.e. when a - b is not in the root lattice.
    """
    if len(a) != len(b):
        raise ValueError("rank mismatch")
    n = len(a)
    d = sum(b) - sum(a)
    if d % n:
        raise NotInRootLattice(f"coordinate sums differ by {d}, not a multiple of {n}")
    if d >= 0:
        a = tuple(x + d // n for x in a)
    else:
        b = tuple(x + (-d) // n for x in b)
    return a, b


def dominance_leq(mu: Eps, la: Eps) -> bool:
    """mu is below la in dominance order: la - mu is a nonnegative sum of
    simple roots.  On sum-aligned representatives this is the classical
    partial-sum condition."""
    try:
        la2, mu2 = aligned(la, mu)
    except NotInRootLattice:
        return False
    s = 0
    for x, y in zip(la2, mu2):
        s += x - y
        if s < 0:
            return False
    return s == 0


def root_coordinates(la: Eps, mu: Eps) -> tuple[int, ...]:
    """Coefficients k_i of la - mu = sum k_i alpha_i in the simple roots.

    Raises NotInRootLattice when the difference is not in the root lattice.
    """
    la2, mu2 = aligned(la, mu)
    out = []
    s = 0
    for i in range(len(la2) - 1):
        s += la2[i] - mu2[i]
        out.append(s)
    return tuple(out)


def support(beta) -> frozenset[int]:
    """Indices of simple roots appearing in beta with nonzero coefficient."""
    return frozenset(i + 1 for i, k in enumerate(beta) if k)


def support_size(beta) -> int:
    return sum(1 for k in beta if k)


def strictly_below(mu: Eps, la: Eps) -> bool:
    """mu != la and (mu below la in dominance, or la - mu dominant).

    This is the order the reconstruction recursion descends along.
    """
    if mu == la:
        return False
    if dominance_leq(mu, la):
        return True
    fm = fundamental_coords(mu)
    fl = fundamental_coords(la)
    return all(a <= b for a, b in zip(fm, fl))


def saturated_dominants(la: Eps) -> list[Eps]:
    """All dominant weights below la in dominance order, la first,
    sorted by decreasing height (ties broken lexicographically).

    la must be dominant and canonical.  A dominant weight below la,
    aligned to la's coordinate sum, is a partition of that sum into at
    most l+1 parts whose partial sums never exceed la's, so we enumerate
    exactly those partitions.
    """
    n = len(la)
    total = sum(la)
    la_partials = []
    s = 0
    for x in la:
        s += x
        la_partials.append(s)
    out: list[Eps] = []

    def rec(parts: list[int], acc: int) -> None:
        i = len(parts)
        if i == n:
            if acc == total:
                out.append(canonical(tuple(parts)))
            return
        hi = min(parts[-1] if parts else total, total - acc, la_partials[i] - acc)
        for p in range(hi, -1, -1):
            if p * (n - i) < total - acc:
                break  # parts are weakly decreasing; the sum is now unreachable
            rec(parts + [p], acc + p)

    rec([], 0)
    out.sort(key=processing_key, reverse=True)
    return out


def dual_weight(d: Eps) -> Eps:
    """Highest weight of the dual module: -w0 acting on a dominant weight,
    i.e. fundamental coordinates reversed.  An involution."""
    return canonical(tuple(-x for x in reversed(d)))


def rho(l: int) -> Eps:
    """Half the sum of positive roots, as the epsilon-vector (l, l-1, ..., 0)."""
    return tuple(range(l, -1, -1))


def positive_roots(l: int) -> list[Eps]:
    """The l(l+1)/2 vectors e_i - e_j for i < j."""
    out = []
    for i in range(l + 1):
        for j in range(i + 1, l + 1):
            v = [0] * (l + 1)
            v[i] = 1
            v[j] = -1
            out.append(tuple(v))
    return out


def pairing(x, y) -> int:
    """Plain integer dot product.

    Shift-safe whenever one argument sums to zero (every root does);
    otherwise the caller must pass sum-aligned representatives.
    """
    if len(x) != len(y):
        raise ValueError("rank mismatch")
    return sum(a * b for a, b in zip(x, y))


def height(eps: Eps) -> int:
    """Pairing of the canonical representative with twice the Weyl vector.

    Strictly decreases when a nonzero nonnegative root combination or a
    nonzero dominant weight is subtracted, so it linearizes the
    recursion order on dominant weights.
    """
    eps = canonical(eps)
    l = len(eps) - 1
    return 2 * pairing(eps, rho(l))


def processing_key(eps: Eps):
    """Total order used for deterministic iteration: height, then lex."""
    return (height(eps), eps)


def dominant_weights_up_to(l: int, bound: int) -> list[Eps]:
    """All dominant weights with height <= bound, in increasing
    processing order."""
    fw_heights = [height(fundamental_weight(l, i)) for i in range(1, l + 1)]
    out: list[Eps] = []

    def rec(i: int, coords: list[int], h: int) -> None:
        if i == l:
            out.append(from_fundamental(l, coords))
            return
        c = 0
        while h + c * fw_heights[i] <= bound:
            rec(i + 1, coords + [c], h + c * fw_heights[i])
            c += 1

    rec(0, [], 0)
    out.sort(key=processing_key)
    return out
