"""Sparse exact arithmetic in the Weyl-invariant subring of the group ring.

Elements live in the orbit-sum basis h(mu), mu dominant, which makes
Weyl invariance structural: a non-invariant element simply cannot be
represented.  Products go through a transient expansion into the e-basis
(orbit convolution) and are re-collected on dominant representatives.
"""

from .lattice import (
    Eps,
    dominance_leq,
    dominant_representative,
    is_dominant,
    orbit,
    orbit_size,
    zero_weight,
)


class CharElement:
    """A Weyl-invariant element, stored as {dominant weight: coefficient}.

    Immutable by convention; every operation returns a fresh element.
    Zero coefficients are never stored.
    """

    __slots__ = ("rank", "terms")

    def __init__(self, rank: int, terms=()):
        items = terms.items() if isinstance(terms, dict) else terms
        clean: dict[Eps, int] = {}
        for mu, c in items:
            if not c:
                continue
            if len(mu) != rank + 1:
                raise ValueError(f"weight {mu} has wrong length for A_{rank}")
            if min(mu) != 0 or not is_dominant(mu):
                raise ValueError(f"{mu} is not a canonical dominant weight")
            clean[mu] = c
        self.rank = rank
        self.terms = clean

    def coefficient(self, mu: Eps) -> int:
        """Coefficient of h(mu)."""
        return self.terms.get(mu, 0)

    def e_coefficient(self, x: Eps) -> int:
        """Coefficient of e(x): the h-coefficient at x's dominant representative."""
        return self.terms.get(dominant_representative(x), 0)

    def dimension(self) -> int:
        """Total number of e-basis terms counted with multiplicity."""
        return sum(c * orbit_size(mu) for mu, c in self.terms.items())

    def leading_dominants(self) -> list[Eps]:
        """Keys that are maximal among the keys in dominance order."""
        keys = list(self.terms)
        return [
            k
            for k in keys
            if not any(k2 != k and dominance_leq(k, k2) for k2 in keys)
        ]

    def _require_same_rank(self, other: "CharElement") -> None:
        if self.rank != other.rank:
            raise ValueError("rank mismatch")

    def __add__(self, other):
        if not isinstance(other, CharElement):
            return NotImplemented
        self._require_same_rank(other)
        out = dict(self.terms)
        for mu, c in other.terms.items():
            out[mu] = out.get(mu, 0) + c
        return CharElement(self.rank, out)

    def __sub__(self, other):
        if not isinstance(other, CharElement):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return CharElement(self.rank, {mu: -c for mu, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return CharElement(self.rank, {mu: c * other for mu, c in self.terms.items()})
        if not isinstance(other, CharElement):
            return NotImplemented
        self._require_same_rank(other)
        orbits: dict[Eps, list[Eps]] = {}
        for key in list(self.terms) + list(other.terms):
            if key not in orbits:
                orbits[key] = list(orbit(key))
        conv: dict[Eps, int] = {}
        for mu, a in self.terms.items():
            for nu, b in other.terms.items():
                ab = a * b
                for x in orbits[mu]:
                    for y in orbits[nu]:
                        z = tuple(p + q for p, q in zip(x, y))
                        m = min(z)
                        if m:
                            z = tuple(p - m for p in z)
                        conv[z] = conv.get(z, 0) + ab
        return CharElement(
            self.rank, {z: c for z, c in conv.items() if is_dominant(z)}
        )

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CharElement)
            and self.rank == other.rank
            and self.terms == other.terms
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"CharElement(rank={self.rank}, terms={self.terms!r})"


def orbit_sum(mu: Eps) -> CharElement:
    """h(mu): the sum of e(x) over the Weyl orbit of mu."""
    return CharElement(len(mu) - 1, {mu: 1})


def unit(l: int) -> CharElement:
    """The multiplicative identity e(0) = h(0)."""
    return orbit_sum(zero_weight(l))


def zero(l: int) -> CharElement:
    return CharElement(l, {})
