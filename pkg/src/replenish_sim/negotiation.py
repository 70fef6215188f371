"""Deterministic alternating-offers price negotiation.

Round r: the buyer's standing bid (opening discount plus a fixed concession
per round) is checked against the supplier's previous ask; if they have not
crossed, the supplier concedes a fixed fraction of the gap to its floor and
the new ask is checked again. Settlement is the midpoint of the first
crossing pair; after max_rounds without a deal the buyer pays list price.

The supplier's floor is list price discounted by max_discount scaled with
order size (saturating at quantity_ref), so bigger orders never negotiate a
worse price. The stream argument only matters when concession jitter is
switched on; by default negotiation is a pure function of its inputs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import SupplierOffer
from .demand import RngStream


@dataclass
class NegotiationParams:
    max_rounds: int = 6
    buyer_opening_discount: float = 0.15
    buyer_concession_step: float = 0.01
    supplier_concession_rate: float = 0.5
    quantity_ref: int = 100
    jitter: float = 0.0

    def __post_init__(self):
        if self.max_rounds < 0:
            raise ValueError("max_rounds must be >= 0")
        for name in ("buyer_opening_discount", "buyer_concession_step",
                     "supplier_concession_rate", "jitter"):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"{name} must be in [0, 1]")
        if self.quantity_ref < 1:
            raise ValueError("quantity_ref must be >= 1")


def price_floor(offer: SupplierOffer, quantity: int, params: NegotiationParams) -> float:
    """Supplier reservation price: discount grows with quantity up to the
    reference tier, never past max_discount."""
    tier = min(1.0, quantity / params.quantity_ref)
    return offer.unit_cost * (1.0 - offer.max_discount * tier)


def negotiate(offer: SupplierOffer, quantity: int, params: NegotiationParams,
              stream: RngStream | None = None) -> float:
    """Negotiated unit price, always within [floor, list price]."""
    if quantity < offer.moq:
        raise ValueError(
            f"quantity {quantity} below MOQ {offer.moq} for offer {offer.key()}")
    list_price = offer.unit_cost
    floor = price_floor(offer, quantity, params)
    if params.max_rounds == 0 or offer.max_discount <= 0.0:
        return list_price
    gen = stream.generator() if (stream is not None and params.jitter > 0.0) else None

    ask = list_price
    for round_no in range(1, params.max_rounds + 1):
        bid = min(list_price, list_price * (1.0 - params.buyer_opening_discount)
                  + (round_no - 1) * params.buyer_concession_step * list_price)
        if ask <= bid:
            return _clamp(0.5 * (ask + bid), floor, list_price)
        rate = params.supplier_concession_rate
        if gen is not None:
            rate *= 1.0 + params.jitter * (2.0 * gen.random() - 1.0)
        ask = max(floor, ask - rate * (ask - floor))
        if ask <= bid:
            return _clamp(0.5 * (ask + bid), floor, list_price)
    return list_price


def _clamp(x: float, lo: float, hi: float) -> float:
    return max(lo, min(hi, x))
