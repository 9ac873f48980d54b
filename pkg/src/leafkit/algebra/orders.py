"""Monomial orders as sort keys on exponent tuples."""

from __future__ import annotations


def _degrevlex_key(e):
    return (sum(e), tuple(-x for x in reversed(e)))


class MonomialOrder:
    """A total, multiplicative monomial order given by a sort key.

    ``key(e1) < key(e2)`` iff ``e1 < e2``.  Orders compare equal by name so
    they can index Groebner-basis caches.
    """

    __slots__ = ("name", "key")

    def __init__(self, name, key):
        self.name = name
        self.key = key

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and other.name == self.name

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return self.name


DEGREVLEX = MonomialOrder("degrevlex", _degrevlex_key)
LEX = MonomialOrder("lex", tuple)


def block_order(n_elim: int) -> MonomialOrder:
    """Elimination order: the first ``n_elim`` variables dominate, degrevlex inside each block."""

    def key(e):
        return (_degrevlex_key(e[:n_elim]), _degrevlex_key(e[n_elim:]))

    return MonomialOrder(f"block({n_elim})", key)
