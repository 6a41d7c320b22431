"""Text specifiers for semigroups.

Three forms, told apart by prefix:

* ``5,7,9``                generators
* ``gaps:1,2,3,4,6,8,11,13`` gap set
* ``kunz:5:16,7,18,9``     multiplicity and Kunz coordinates
"""

from typing import List

from app.semigroups.core import (
    NumericalSemigroup,
    from_coordinates,
    from_gaps,
    from_generators,
)
from app.semigroups.errors import ParseError

GAPS_PREFIX = "gaps:"
KUNZ_PREFIX = "kunz:"


def _parse_integers(text: str) -> List[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(part) for part in text.replace(" ", "").split(",")]
    except ValueError:
        raise ParseError(f"Expected comma-separated integers, got {text!r}")


def parse_semigroup(text: str) -> NumericalSemigroup:
    """Turn a specifier into a validated semigroup"""
    specifier = text.strip()
    lowered = specifier.lower()
    if lowered.startswith(GAPS_PREFIX):
        return from_gaps(_parse_integers(specifier[len(GAPS_PREFIX) :]))
    if lowered.startswith(KUNZ_PREFIX):
        head, sep, tail = specifier[len(KUNZ_PREFIX) :].partition(":")
        if not sep:
            raise ParseError(f"Expected kunz:M:w1,...,w(M-1), got {text!r}")
        try:
            m = int(head)
        except ValueError:
            raise ParseError(f"Multiplicity must be an integer, got {head!r}")
        return from_coordinates(m, _parse_integers(tail))
    return from_generators(_parse_integers(specifier))


def format_semigroup(S: NumericalSemigroup) -> str:
    return str(S)


def format_coordinates(S: NumericalSemigroup) -> str:
    return ",".join(str(c) for c in S.coords)
