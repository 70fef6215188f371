"""Domain types and the inventory ledger.

The ledger is the single bookkeeping substrate every agent reads and
writes: batch-aged on-hand stock per SKU (FIFO, oldest first), a pipeline
of in-transit shipments, and cumulative cost/unit accounts kept in integer
cents so period costs sum exactly.

Per-period call order (enforced by the engine): receive_shipments ->
fulfill_demand -> age_and_spoil -> ... -> accrue_period_costs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .numerics import is_cent_exact, to_cents

CATEGORIES = ("grocery", "clothing", "cosmetics", "frozen", "other")

COST_KEYS = ("purchase", "holding", "stockout", "spoilage")


@dataclass
class Sku:
    """Item master record; costs are currency per unit, decay per period."""

    id: str
    category: str = "other"
    holding_cost: float = 0.0
    stockout_penalty: float = 0.0
    decay_fraction: float = 0.0
    shelf_life: int | None = None  # None = durable
    unit_margin: float = 0.0

    def __post_init__(self):
        if not self.id:
            raise ValueError("sku id must be non-empty")
        if self.category not in CATEGORIES:
            raise ValueError(f"unknown category {self.category!r} for sku {self.id}")
        if self.holding_cost < 0 or self.stockout_penalty < 0:
            raise ValueError(f"sku {self.id}: costs must be >= 0")
        if not 0.0 <= self.decay_fraction <= 1.0:
            raise ValueError(f"sku {self.id}: decay_fraction must be in [0, 1]")
        if self.shelf_life is not None and self.shelf_life < 1:
            raise ValueError(f"sku {self.id}: shelf_life must be >= 1")

    @property
    def perishable(self) -> bool:
        return self.decay_fraction > 0.0 or self.shelf_life is not None


@dataclass
class SupplierOffer:
    """One supplier's terms for one SKU."""

    supplier_id: str
    sku_id: str
    unit_cost: float
    lead_time: int
    moq: int = 0
    capacity_per_order: int | None = None  # None = unbounded
    reliability: float = 1.0
    fixed_shipping: float = 0.0
    max_discount: float = 0.0

    def __post_init__(self):
        if self.unit_cost <= 0:
            raise ValueError(f"offer {self.key()}: unit_cost must be > 0")
        if self.lead_time < 1:
            raise ValueError(f"offer {self.key()}: lead_time must be >= 1")
        if self.moq < 0:
            raise ValueError(f"offer {self.key()}: moq must be >= 0")
        if self.capacity_per_order is not None and self.capacity_per_order < 1:
            raise ValueError(f"offer {self.key()}: capacity_per_order must be >= 1")
        if not 0.0 <= self.reliability <= 1.0:
            raise ValueError(f"offer {self.key()}: reliability must be in [0, 1]")
        if not 0.0 <= self.max_discount < 1.0:
            raise ValueError(f"offer {self.key()}: max_discount must be in [0, 1)")
        if self.unit_cost * (1.0 - self.max_discount) <= 0:
            raise ValueError(f"offer {self.key()}: floor price must be > 0")
        if self.fixed_shipping < 0:
            raise ValueError(f"offer {self.key()}: fixed_shipping must be >= 0")

    def key(self) -> str:
        return f"{self.supplier_id}/{self.sku_id}"

    @property
    def capacity(self) -> int:
        return self.capacity_per_order if self.capacity_per_order is not None else 10 ** 9


@dataclass
class Batch:
    """On-hand stock lot: quantity, age in periods, purchase cost in cents."""

    quantity: int
    age: int = 0
    unit_cost_cents: int = 0


@dataclass
class Shipment:
    """In-transit pipeline entry (realized arrival after disruptions)."""

    arrival_period: int
    quantity: int
    unit_cost_cents: int


@dataclass
class OrderDecision:
    """A committed (or candidate) purchase order for one SKU."""

    sku_id: str
    supplier_id: str
    quantity: int
    negotiated_unit_price: float
    placed_at: int
    promised_arrival: int
    criticality: float = 0.0
    list_price: float = 0.0
    fixed_shipping: float = 0.0

    @property
    def landed_cost_cents(self) -> int:
        return to_cents(self.negotiated_unit_price) * self.quantity + to_cents(self.fixed_shipping)


@dataclass
class _SkuAccount:
    batches: list[Batch] = field(default_factory=list)
    pipeline: list[Shipment] = field(default_factory=list)
    # cumulative money, integer cents
    cost: dict[str, int] = field(default_factory=lambda: {k: 0 for k in COST_KEYS})
    # cumulative units
    demand: int = 0
    sales: int = 0
    stockout_units: int = 0
    spoiled_units: int = 0
    received: int = 0
    cogs_cents: int = 0
    # current-period buckets, reset by accrue_period_costs
    period_cost: dict[str, int] = field(default_factory=lambda: {k: 0 for k in COST_KEYS})
    period_units: dict[str, int] = field(
        default_factory=lambda: {"received": 0, "sales": 0, "spoiled": 0})


class InventoryLedger:
    """Batch-aged stock, pipeline, and cost accounts for a set of SKUs."""

    def __init__(self, skus: dict[str, Sku]):
        self.skus = dict(skus)
        self._acct = {sku_id: _SkuAccount() for sku_id in self.skus}
        for sku in self.skus.values():
            if not is_cent_exact(sku.holding_cost) or not is_cent_exact(sku.stockout_penalty):
                raise ValueError(f"sku {sku.id}: currency parameters must be whole cents")

    def account(self, sku_id: str) -> _SkuAccount:
        return self._acct[sku_id]

    def add_sku(self, sku: Sku) -> None:
        if sku.id in self.skus:
            raise ValueError(f"sku {sku.id} already tracked")
        self.skus[sku.id] = sku
        self._acct[sku.id] = _SkuAccount()

    def on_hand(self, sku_id: str) -> int:
        return sum(b.quantity for b in self._acct[sku_id].batches)

    def pipeline_quantity(self, sku_id: str) -> int:
        return sum(s.quantity for s in self._acct[sku_id].pipeline)

    def position(self, sku_id: str) -> int:
        return self.on_hand(sku_id) + self.pipeline_quantity(sku_id)

    def inventory_value_cents(self, sku_id: str | None = None) -> int:
        ids = [sku_id] if sku_id is not None else list(self._acct)
        return sum(b.quantity * b.unit_cost_cents
                   for i in ids for b in self._acct[i].batches)

    def add_initial_stock(self, sku_id: str, quantity: int, unit_cost: float) -> None:
        if quantity > 0:
            self._acct[sku_id].batches.append(
                Batch(quantity=quantity, age=0, unit_cost_cents=to_cents(unit_cost)))

    def add_shipment(self, sku_id: str, arrival_period: int, quantity: int,
                     unit_price: float) -> None:
        if quantity > 0:
            self._acct[sku_id].pipeline.append(
                Shipment(arrival_period, quantity, to_cents(unit_price)))

    def book_purchase(self, sku_id: str, amount_cents: int) -> None:
        acct = self._acct[sku_id]
        acct.cost["purchase"] += amount_cents
        acct.period_cost["purchase"] += amount_cents

    def fulfill_demand(self, sku_id: str, demand: int) -> tuple[int, int]:
        """Consume oldest batches first; unmet demand is lost and penalized."""
        if demand < 0:
            raise ValueError("demand must be >= 0")
        acct = self._acct[sku_id]
        sku = self.skus[sku_id]
        acct.demand += demand
        remaining = demand
        for batch in acct.batches:
            take = min(batch.quantity, remaining)
            batch.quantity -= take
            remaining -= take
            acct.cogs_cents += take * batch.unit_cost_cents
            if remaining == 0:
                break
        acct.batches = [b for b in acct.batches if b.quantity > 0]
        sales = demand - remaining
        stockout = remaining
        acct.sales += sales
        acct.period_units["sales"] += sales
        acct.stockout_units += stockout
        penalty = to_cents(sku.stockout_penalty) * stockout
        acct.cost["stockout"] += penalty
        acct.period_cost["stockout"] += penalty
        return sales, stockout

    def age_and_spoil(self, sku_id: str) -> int:
        """Age every batch one period, expire past shelf life, then remove
        floor(decay * on_hand) units oldest-first. Returns spoiled units."""
        acct = self._acct[sku_id]
        sku = self.skus[sku_id]
        spoiled = 0
        cost = 0
        kept = []
        for batch in acct.batches:
            batch.age += 1
            if sku.shelf_life is not None and batch.age > sku.shelf_life:
                spoiled += batch.quantity
                cost += batch.quantity * batch.unit_cost_cents
            else:
                kept.append(batch)
        acct.batches = kept
        if sku.decay_fraction > 0.0:
            on_hand = sum(b.quantity for b in acct.batches)
            decay = int(math.floor(sku.decay_fraction * on_hand))
            remaining = decay
            for batch in acct.batches:
                take = min(batch.quantity, remaining)
                batch.quantity -= take
                remaining -= take
                spoiled += take
                cost += take * batch.unit_cost_cents
                if remaining == 0:
                    break
            acct.batches = [b for b in acct.batches if b.quantity > 0]
        acct.spoiled_units += spoiled
        acct.period_units["spoiled"] += spoiled
        acct.cost["spoilage"] += cost
        acct.period_cost["spoilage"] += cost
        return spoiled

    def receive_shipments(self, sku_id: str, period: int) -> int:
        """Turn pipeline entries due this period into fresh age-0 batches."""
        acct = self._acct[sku_id]
        received = 0
        still_inbound = []
        for shipment in acct.pipeline:
            if shipment.arrival_period <= period:
                acct.batches.append(
                    Batch(quantity=shipment.quantity, age=0,
                          unit_cost_cents=shipment.unit_cost_cents))
                received += shipment.quantity
            else:
                still_inbound.append(shipment)
        acct.pipeline = still_inbound
        acct.received += received
        acct.period_units["received"] += received
        return received

    def accrue_period_costs(self, sku_id: str) -> int:
        """Close the period: charge holding on end on-hand, return the
        period's four-component total in cents, reset period buckets."""
        acct = self._acct[sku_id]
        sku = self.skus[sku_id]
        holding = to_cents(sku.holding_cost) * self.on_hand(sku_id)
        acct.cost["holding"] += holding
        acct.period_cost["holding"] += holding
        total = sum(acct.period_cost.values())
        for key in COST_KEYS:
            acct.period_cost[key] = 0
        for key in acct.period_units:
            acct.period_units[key] = 0
        return total

    def total_cost_cents(self, sku_id: str | None = None) -> int:
        ids = [sku_id] if sku_id is not None else list(self._acct)
        return sum(sum(self._acct[i].cost.values()) for i in ids)

    def cost_breakdown_cents(self) -> dict[str, int]:
        out = {k: 0 for k in COST_KEYS}
        for acct in self._acct.values():
            for key in COST_KEYS:
                out[key] += acct.cost[key]
        return out
