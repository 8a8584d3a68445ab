"""The counterexample gallery: presented spaces with decidable oracles."""

from __future__ import annotations

from ..errors import UnknownName
from .example_p import ExampleP
from .flats import NatCofinite, NatTopBotUpper, NatTopUpper
from .johnstone import JohnstoneSpace
from .presented import ClaimReport, PresentedSpace, Truncation, require_pass

_REGISTRY = {
    "nat_top_upper": NatTopUpper,
    "nat_top_bot_upper": NatTopBotUpper,
    "example_P_scott": ExampleP,
    "johnstone_scott": JohnstoneSpace,
    "nat_cofinite": NatCofinite,
}


def gallery_names() -> tuple[str, ...]:
    return tuple(_REGISTRY)


def gallery_space(name: str) -> PresentedSpace:
    try:
        cls = _REGISTRY[name]
    except KeyError:
        raise UnknownName(f"{name!r}; known: {', '.join(_REGISTRY)}") from None
    return cls()


def verify_gallery_claims(name: str, depth: int = 8) -> ClaimReport:
    """Run the named space's claim list; raises ClaimFailed on any failure."""
    return require_pass(gallery_space(name).verify(depth))
