"""Supplier ranking and quantity allocation under MOQ/capacity.

Offers are scored on normalized landed cost, lead time, and unreliability
(lower is better) and filled greedily in score order, splitting across
suppliers when one order's capacity is not enough. MOQ round-up is allowed
only while the overshoot stays within 25% of the remaining need.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import SupplierOffer

MOQ_OVERSHOOT_TOLERANCE = 0.25


@dataclass(frozen=True)
class SupplierScoreWeights:
    cost: float = 0.5
    lead: float = 0.25
    reliability: float = 0.25

    def __post_init__(self):
        if min(self.cost, self.lead, self.reliability) < 0:
            raise ValueError("score weights must be >= 0")
        if abs(self.cost + self.lead + self.reliability - 1.0) > 1e-9:
            raise ValueError("score weights must sum to 1")


@dataclass
class Allocation:
    """One slice of a proposal assigned to a specific offer."""

    offer: SupplierOffer
    quantity: int


def landed_cost(offer: SupplierOffer, quantity: int, unit_price: float | None = None) -> float:
    """Total landed cost: unit price x quantity plus the fixed shipping fee."""
    if quantity < offer.moq:
        raise ValueError(
            f"quantity {quantity} below MOQ {offer.moq} for offer {offer.key()}")
    price = offer.unit_cost if unit_price is None else unit_price
    return price * quantity + offer.fixed_shipping


def score_offer(offer: SupplierOffer, quantity: int, weights: SupplierScoreWeights,
                max_landed: float, max_lead: int,
                reliability: float | None = None) -> float:
    """Weighted score, lower is better; normalizers come from the candidate set."""
    if max_landed <= 0 or max_lead <= 0:
        raise ValueError("score normalizers must be positive")
    rel = offer.reliability if reliability is None else reliability
    return (weights.cost * (landed_cost(offer, quantity) / max_landed)
            + weights.lead * (offer.lead_time / max_lead)
            + weights.reliability * (1.0 - rel))


def rank_offers(offers: list[SupplierOffer], quantity: int, weights: SupplierScoreWeights,
                reliability: dict[str, float] | None = None) -> list[SupplierOffer]:
    """Offers sorted by score ascending, ties by supplier id; each offer is
    scored at the quantity clamped into its own [moq, capacity] band."""
    if not offers:
        raise ValueError("empty offer set")
    eval_qty = {o.key(): max(o.moq, min(max(quantity, 1), o.capacity)) for o in offers}
    max_landed = max(landed_cost(o, eval_qty[o.key()]) for o in offers)
    max_lead = max(o.lead_time for o in offers)
    rel = reliability or {}

    def key(offer: SupplierOffer):
        score = score_offer(offer, eval_qty[offer.key()], weights, max_landed, max_lead,
                            rel.get(offer.supplier_id))
        return (score, offer.supplier_id)

    return sorted(offers, key=key)


def allocate(quantity: int, offers: list[SupplierOffer], weights: SupplierScoreWeights,
             reliability: dict[str, float] | None = None) -> tuple[list[Allocation], int]:
    """Greedy fill of `quantity` by ascending score.

    Returns (allocations, shortfall). Shortfall > 0 means no feasible offer
    could absorb the remainder (every MOQ overshoots by more than 25%);
    the coordinator sees it and the monitoring loop re-flags next period.
    """
    if quantity <= 0:
        return [], 0
    ranked = rank_offers(offers, quantity, weights, reliability)
    allocations: list[Allocation] = []
    remaining = quantity
    for offer in ranked:
        if remaining <= 0:
            break
        take = min(remaining, offer.capacity)
        if take < offer.moq:
            if offer.moq > offer.capacity:
                continue
            if offer.moq > (1.0 + MOQ_OVERSHOOT_TOLERANCE) * remaining:
                continue
            take = offer.moq
        allocations.append(Allocation(offer=offer, quantity=take))
        remaining -= take
    return allocations, max(0, remaining)


@dataclass
class ReliabilityTracker:
    """Exponentially weighted on-time/in-full rate per supplier; replaces
    the catalog reliability in scoring once enough deliveries are seen."""

    smoothing: float = 0.2
    min_observations: int = 10
    rates: dict = field(default_factory=dict)
    counts: dict = field(default_factory=dict)

    def record(self, supplier_id: str, on_time: bool, in_full: bool) -> None:
        otif = 1.0 if (on_time and in_full) else 0.0
        prev = self.rates.get(supplier_id)
        self.rates[supplier_id] = otif if prev is None else (
            self.smoothing * otif + (1.0 - self.smoothing) * prev)
        self.counts[supplier_id] = self.counts.get(supplier_id, 0) + 1

    def effective(self, offers: list[SupplierOffer]) -> dict[str, float]:
        out = {}
        for offer in offers:
            if self.counts.get(offer.supplier_id, 0) >= self.min_observations:
                out[offer.supplier_id] = self.rates[offer.supplier_id]
        return out
