"""Global arbitration of candidate orders against budget and warehouse
capacity.

Whole orders are funded greedily by criticality density (criticality per
cent of landed cost); anything that would break the period budget or the
projected warehouse fill is deferred, and the monitoring loop re-flags the
SKU next period. Greedy keeps arbitration deterministic; tests bound its
gap against an exact knapsack on small instances.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import OrderDecision

UNBOUNDED = float("inf")


@dataclass
class GlobalConstraints:
    budget_per_period: float | None = None  # currency, None = unbounded
    warehouse_capacity: int | None = None   # units, None = unbounded
    max_orders_per_period: int | None = None

    def __post_init__(self):
        if self.budget_per_period is not None and self.budget_per_period < 0:
            raise ValueError("budget_per_period must be >= 0")
        if self.warehouse_capacity is not None and self.warehouse_capacity < 0:
            raise ValueError("warehouse_capacity must be >= 0")
        if self.max_orders_per_period is not None and self.max_orders_per_period < 0:
            raise ValueError("max_orders_per_period must be >= 0")

    @property
    def budget_cents(self) -> float:
        if self.budget_per_period is None:
            return UNBOUNDED
        return round(self.budget_per_period * 100)

    @property
    def capacity_units(self) -> float:
        return UNBOUNDED if self.warehouse_capacity is None else self.warehouse_capacity

    @property
    def order_limit(self) -> float:
        return UNBOUNDED if self.max_orders_per_period is None else self.max_orders_per_period


def arbitrate(candidates: list[OrderDecision], constraints: GlobalConstraints,
              projected_inventory: int) -> tuple[list[OrderDecision], list[OrderDecision]]:
    """Split candidates into (funded, deferred); no partial funding.

    projected_inventory is the warehouse-wide on-hand plus pipeline at
    commit time; funded arrivals must keep it within capacity.
    """
    def density(order: OrderDecision) -> float:
        cost = order.landed_cost_cents
        return order.criticality / cost if cost > 0 else UNBOUNDED

    ranked = sorted(candidates, key=lambda o: (-density(o), o.sku_id, o.supplier_id))
    funded: list[OrderDecision] = []
    deferred: list[OrderDecision] = []
    spent = 0
    projected = projected_inventory
    for order in ranked:
        cost = order.landed_cost_cents
        if (len(funded) + 1 <= constraints.order_limit
                and spent + cost <= constraints.budget_cents
                and projected + order.quantity <= constraints.capacity_units):
            funded.append(order)
            spent += cost
            projected += order.quantity
        else:
            deferred.append(order)
    return funded, deferred
