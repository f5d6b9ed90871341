"""Nested finite fields of factorial degrees with compatible embeddings.

A tower over p holds the fields F_(p^(n!)) for n = 1..levels (capped at 3),
each presented as F_p[x]/(f_n) where f_n is the first irreducible polynomial
of degree n! in the base-p enumeration whose root generates the units.
Embeddings between levels are fixed once, at construction, by sending the
lower root to the lexicographically least root upstairs, and their pairwise
compatibility is asserted rather than assumed.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import factorial

from . import polyfp
from .digits import ArgumentError, require_prime

LEVEL_CAP = 3


class CapabilityError(RuntimeError):
    """The request is beyond the deliberately small scale of this library."""


class FieldElement:
    """An element of one level of a tower, as a coordinate vector over F_p."""

    __slots__ = ("tower", "level", "coords")

    def __init__(self, tower, level, coords):
        self.tower = tower
        self.level = level
        self.coords = coords

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def _pair(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        if other.tower is not self.tower:
            raise ArgumentError("elements belong to different towers")
        if self.level == other.level:
            return self, other
        if self.level < other.level:
            return self.embed(other.level), other
        return self, other.embed(self.level)

    def __add__(self, other):
        a, b = self._pair(other)
        p = a.tower.p
        return FieldElement(
            a.tower, a.level, tuple((x + y) % p for x, y in zip(a.coords, b.coords))
        )

    def __neg__(self):
        p = self.tower.p
        return FieldElement(self.tower, self.level, tuple((-x) % p for x in self.coords))

    def __sub__(self, other):
        a, b = self._pair(other)
        p = a.tower.p
        return FieldElement(
            a.tower, a.level, tuple((x - y) % p for x, y in zip(a.coords, b.coords))
        )

    def __mul__(self, other):
        a, b = self._pair(other)
        return FieldElement(
            a.tower, a.level, a.tower._mul_coords(a.level, a.coords, b.coords)
        )

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return FieldElement(
            self.tower, self.level, self.tower._inv_coords(self.level, self.coords)
        )

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        if self.is_zero():
            return self.tower.one(self.level) if e == 0 else self
        q = self.tower.order(self.level)
        e %= q - 1
        result = self.tower.one(self.level)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def frobenius(self, k=1):
        """Apply x -> x^(p^k); k reduces mod the level degree."""
        deg = self.tower.degree(self.level)
        out = self
        for _ in range(k % deg):
            out = out ** self.tower.p
        return out

    def embed(self, level):
        if level < self.level:
            raise ArgumentError("cannot embed downward")
        if level > self.tower.levels:
            raise ArgumentError(f"tower has no level {level}")
        if level == self.level:
            return self
        coords = self.tower._embed_coords(self.coords, self.level, level)
        return FieldElement(self.tower, level, coords)

    def __eq__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        return (
            self.tower is other.tower
            and self.level == other.level
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash((id(self.tower), self.level, self.coords))

    def __repr__(self):
        return f"FieldElement(p={self.tower.p}, level={self.level}, coords={self.coords})"


class FieldTower:
    """Immutable after construction; safe to share across computations."""

    def __init__(self, p, levels):
        require_prime(p)
        if not 1 <= levels <= LEVEL_CAP:
            raise CapabilityError(
                f"tower levels must lie in [1, {LEVEL_CAP}], got {levels}"
            )
        self.p = p
        self.levels = levels
        self._degrees = {n: factorial(n) for n in range(1, levels + 1)}
        self._polys = {}
        self._mul_cache = {n: {} for n in range(1, levels + 1)}
        self._inv_cache = {n: {} for n in range(1, levels + 1)}
        self._embed_basis = {}
        for n in range(1, levels + 1):
            self._polys[n] = polyfp.least_irreducible(p, self._degrees[n], primitive=True)
        for m in range(1, levels + 1):
            for n in range(m + 1, levels + 1):
                self._embed_basis[(m, n)] = self._build_embedding(m, n)
        self._assert_embedding_compatibility()
        for n in range(1, levels + 1):
            self._assert_primitive(n)

    # -- construction internals ------------------------------------------

    def _build_embedding(self, m, n):
        """Images of the level-m power basis inside level n."""
        dm = self._degrees[m]
        qm = self.p ** dm
        qn = self.p ** self._degrees[n]
        gen = self._gen_coords(n)
        # roots of the level-m polynomial lie in the unique subfield of
        # size qm, swept by powers of gen^((qn-1)/(qm-1))
        step = self._pow_coords(n, gen, (qn - 1) // (qm - 1))
        roots = []
        cand = self._one_coords(n)
        seen = set()
        for _ in range(qm - 1):
            if cand in seen:
                break
            seen.add(cand)
            if self._eval_poly_at(n, self._polys[m], cand) is None:
                roots.append(cand)
            cand = self._mul_coords(n, cand, step)
        zero = self._zero_coords(n)
        if self._eval_poly_at(n, self._polys[m], zero) is None:
            roots.append(zero)
        if len(roots) != dm:
            raise RuntimeError("embedding root count mismatch")
        rho = min(roots)
        images = [self._one_coords(n)]
        for _ in range(dm - 1):
            images.append(self._mul_coords(n, images[-1], rho))
        return tuple(images)

    def _assert_embedding_compatibility(self):
        for m in range(1, self.levels + 1):
            for k in range(m + 1, self.levels + 1):
                for n in range(k + 1, self.levels + 1):
                    for j in range(self._degrees[m]):
                        basis = tuple(
                            1 if i == j else 0 for i in range(self._degrees[m])
                        )
                        via_k = self._embed_coords(
                            self._embed_coords(basis, m, k), k, n
                        )
                        direct = self._embed_coords(basis, m, n)
                        if via_k != direct:
                            raise RuntimeError(
                                f"incompatible embeddings {m}->{k}->{n}"
                            )

    def _assert_primitive(self, n):
        q = self.order(n)
        gen = self._gen_coords(n)
        if self._pow_coords(n, gen, q - 1) != self._one_coords(n):
            raise RuntimeError("generator order check failed")
        for ell in polyfp.prime_factors(q - 1):
            if self._pow_coords(n, gen, (q - 1) // ell) == self._one_coords(n):
                raise RuntimeError(f"generator is not primitive at level {n}")

    # -- coordinate kernels ----------------------------------------------

    def _zero_coords(self, n):
        return (0,) * self._degrees[n]

    def _one_coords(self, n):
        return (1,) + (0,) * (self._degrees[n] - 1)

    def _gen_coords(self, n):
        d = self._degrees[n]
        if d == 1:
            # degree-one modulus x - a: the root class is a
            return ((-self._polys[n][0]) % self.p,)
        return tuple(1 if i == 1 else 0 for i in range(d))

    def _mul_coords(self, n, a, b):
        key = (a, b) if a <= b else (b, a)
        cache = self._mul_cache[n]
        hit = cache.get(key)
        if hit is not None:
            return hit
        prod = polyfp.poly_mod(polyfp.mul(a, b, self.p), self._polys[n], self.p)
        out = prod + (0,) * (self._degrees[n] - len(prod))
        cache[key] = out
        return out

    def _pow_coords(self, n, a, e):
        result = self._one_coords(n)
        base = a
        while e:
            if e & 1:
                result = self._mul_coords(n, result, base)
            base = self._mul_coords(n, base, base)
            e >>= 1
        return result

    def _inv_coords(self, n, a):
        cache = self._inv_cache[n]
        hit = cache.get(a)
        if hit is not None:
            return hit
        out = self._pow_coords(n, a, self.order(n) - 2)
        cache[a] = out
        cache[out] = a
        return out

    def _eval_poly_at(self, n, poly, point):
        acc = self._zero_coords(n)
        for c in reversed(poly):
            acc = self._mul_coords(n, acc, point)
            if c:
                acc = tuple(
                    (x + (c if i == 0 else 0)) % self.p for i, x in enumerate(acc)
                )
        return acc if any(acc) else None

    def _embed_coords(self, coords, m, n):
        images = self._embed_basis[(m, n)]
        out = self._zero_coords(n)
        for c, img in zip(coords, images):
            if c:
                out = tuple((x + c * y) % self.p for x, y in zip(out, img))
        return out

    # -- public surface ----------------------------------------------------

    def degree(self, level) -> int:
        if level not in self._degrees:
            raise ArgumentError(f"tower has no level {level}")
        return self._degrees[level]

    def order(self, level) -> int:
        return self.p ** self.degree(level)

    def defining_polynomial(self, level):
        return self._polys[level]

    def zero(self, level):
        return FieldElement(self, level, self._zero_coords(level))

    def one(self, level):
        return FieldElement(self, level, self._one_coords(level))

    def scalar(self, c, level):
        """The prime-field scalar c at the given level."""
        c %= self.p
        return FieldElement(
            self, level, (c,) + (0,) * (self.degree(level) - 1)
        )

    def element(self, coords, level):
        coords = tuple(c % self.p for c in coords)
        if len(coords) != self.degree(level):
            raise ArgumentError("coordinate length does not match the level degree")
        return FieldElement(self, level, coords)

    def multiplicative_generator(self, level):
        return FieldElement(self, level, self._gen_coords(level))

    def enumerate_elements(self, level):
        """All p^(n!) elements, in lexicographic coordinate order."""
        for coords in itertools.product(range(self.p), repeat=self.degree(level)):
            yield FieldElement(self, level, coords)

    def standard_basis(self, level):
        d = self.degree(level)
        return tuple(
            FieldElement(self, level, tuple(1 if i == j else 0 for i in range(d)))
            for j in range(d)
        )


@lru_cache(maxsize=None)
def make_tower(p, levels=LEVEL_CAP) -> FieldTower:
    return FieldTower(p, levels)
