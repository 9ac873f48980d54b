"""Derivations of polynomial rings, fixed by the images of the variables."""

from __future__ import annotations

from ..errors import NotDescending, SignatureMismatch
from .poly import Poly, Ring


class Derivation:
    """A derivation of ``ring`` with ``images[i] = d(x_i)``.

    If ``relations`` (an ``Ideal``) is given, the derivation must map every
    generator of it back into it, so that it descends to the quotient ring.
    """

    __slots__ = ("ring", "images", "relations")

    def __init__(self, ring: Ring, images, relations=None):
        images = tuple(ring(g) for g in images)
        if len(images) != ring.nvars:
            raise SignatureMismatch(f"{ring!r} needs {ring.nvars} images, got {len(images)}")
        self.ring = ring
        self.images = images
        self.relations = relations
        if relations is not None:
            if relations.ring != ring:
                raise SignatureMismatch("relations live in another ring")
            for g in relations.gens:
                if not relations.contains(self(g)):
                    raise NotDescending(f"d({g}) = {self(g)} is not in the relation ideal")

    @classmethod
    def from_mapping(cls, ring: Ring, mapping: dict, relations=None):
        """Build from ``{name: image}``; unmentioned variables map to 0."""
        images = [ring.zero] * ring.nvars
        for name, img in mapping.items():
            images[ring.index(name)] = ring(img)
        return cls(ring, images, relations)

    def __eq__(self, other):
        return isinstance(other, Derivation) and self.ring == other.ring and self.images == other.images

    def __hash__(self):
        return hash((self.ring, self.images))

    def __repr__(self):
        body = ", ".join(f"{n} -> {g}" for n, g in zip(self.ring.names, self.images))
        return f"Derivation({body})"

    def __call__(self, f: Poly) -> Poly:
        f = self.ring(f)
        out = self.ring.zero
        for i, img in enumerate(self.images):
            if img:
                fi = f.diff(i)
                if fi:
                    out = out + fi * img
        return out

    def iterate(self, f: Poly, n: int) -> Poly:
        """The n-th iterate f^(n); f^(0) = f."""
        if n < 0:
            raise ValueError("n must be nonnegative")
        f = self.ring(f)
        for _ in range(n):
            if not f:
                break
            f = self(f)
        return f

    def orbit(self, f: Poly, n: int):
        """[f, f', ..., f^(n)]."""
        out = [self.ring(f)]
        for _ in range(n):
            out.append(self(out[-1]))
        return out

    def with_relations(self, relations) -> Derivation:
        return Derivation(self.ring, self.images, relations)


def apply_derivation(d: Derivation, f: Poly) -> Poly:
    return d(f)


def apply_derivation_iter(d: Derivation, f: Poly, n: int) -> Poly:
    return d.iterate(f, n)
