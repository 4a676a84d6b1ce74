"""Predicates for the element classes and relations under study.

The class predicates consume an InverseBundle rather than computing inverses
themselves, so existence failures surface in exactly one place (the harness
filter).  All tests are exact equalities of canonical forms.
"""

from __future__ import annotations

from dataclasses import dataclass

from .geninv import InverseBundle
from .matrix import Matrix


@dataclass(frozen=True)
class Classification:
    is_projection: bool
    is_ep: bool
    is_pi: bool
    is_sep: bool
    mp_invertible: bool
    group_invertible: bool

    def __post_init__(self):
        # sep forces ep, pi and both memberships; a projection is always sep
        assert not self.is_sep or (self.is_ep and self.is_pi
                                   and self.mp_invertible and self.group_invertible)
        assert not self.is_projection or self.is_sep


def is_projection(e: Matrix) -> bool:
    """e is a self-adjoint idempotent.

    The one-sided forms e = e e* and e = e* e are each equivalent to the
    definition; all three are evaluated and must agree, as an internal
    consistency check on the involution.
    """
    e_star = e.star()
    direct = e * e == e and e_star == e
    via_right = e == e * e_star
    via_left = e == e_star * e
    if not (direct == via_right == via_left):
        raise AssertionError(f"projection characterizations disagree on {e!r}")
    return direct


def _require(b: InverseBundle, mp: bool, group: bool):
    if mp and not b.has_mp:
        raise ValueError("element has no MP inverse")
    if group and not b.has_group:
        raise ValueError("element has no group inverse")


def is_ep(b: InverseBundle) -> bool:
    """Group inverse and MP inverse coincide."""
    _require(b, mp=True, group=True)
    return b.group == b.mp


def is_pi(b: InverseBundle) -> bool:
    """Partial isometry: the adjoint is the MP inverse."""
    _require(b, mp=True, group=False)
    return b.star == b.mp


def is_sep(b: InverseBundle) -> bool:
    """Strongly EP: adjoint, MP inverse and group inverse all coincide."""
    _require(b, mp=True, group=True)
    return b.star == b.mp and b.mp == b.group


def classify(b: InverseBundle) -> Classification:
    """Lenient classification; absent inverses yield False memberships."""
    pi = b.has_mp and b.star == b.mp
    ep = b.has_mp and b.has_group and b.mp == b.group
    sep = ep and pi
    return Classification(
        is_projection=is_projection(b.a),
        is_ep=ep,
        is_pi=pi,
        is_sep=sep,
        mp_invertible=b.has_mp,
        group_invertible=b.has_group,
    )


def is_left_idempotent_for(e: Matrix, a: Matrix) -> bool:
    """e^2 = a e."""
    return e * e == a * e


def is_right_idempotent_for(e: Matrix, a: Matrix) -> bool:
    """e^2 = e a."""
    return e * e == e * a


def are_left_equivalent_for(b: Matrix, c: Matrix, a: Matrix) -> bool:
    """a b = a c."""
    return a * b == a * c


def are_right_equivalent_for(b: Matrix, c: Matrix, a: Matrix) -> bool:
    """b a = c a."""
    return b * a == c * a
