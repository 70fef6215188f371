"""Reorder policies: monitoring triggers and candidate order quantities.

All deciders are pure functions of a per-SKU snapshot (`SkuView`) the
engine assembles each period. Triggers use inventory position (on hand +
pipeline) rather than raw on-hand stock, so an order already in flight is
not placed twice during its lead time.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import Sku, SupplierOffer
from .numerics import norm_ppf, normal_loss, round_half_up

POLICY_KINDS = ("static_rop", "rule80", "sq", "newsvendor", "agentic", "oracle")

# h = 0 makes the newsvendor critical ratio degenerate; cap the service
# quantile instead of chasing an unbounded order-up-to level.
MAX_CRITICAL_RATIO = 0.999

# decay 1.0 would make effective perishable demand unbounded
MAX_DECAY_ADJUST = 0.9


@dataclass
class PolicyParams:
    kind: str = "agentic"
    z: float = 1.645
    review_period: int = 1
    order_fixed_cost: float = 0.0
    buffer_fraction: float = 0.0
    monitor_horizon: int = 1

    def __post_init__(self):
        if self.kind not in POLICY_KINDS:
            raise ValueError(f"unknown policy kind {self.kind!r}; "
                             f"valid: {', '.join(POLICY_KINDS)}")
        if self.z < 0:
            raise ValueError("z must be >= 0")
        if self.review_period < 1:
            raise ValueError("review_period must be >= 1")
        if self.order_fixed_cost < 0:
            raise ValueError("order_fixed_cost must be >= 0")
        if self.monitor_horizon < 0:
            raise ValueError("monitor_horizon must be >= 0")


@dataclass
class ReorderProposal:
    sku_id: str
    quantity: int
    needed_by: int = 0
    criticality: float = 0.0
    rationale: str = "none"


@dataclass
class SkuView:
    """Per-period snapshot of everything a decider may look at."""

    sku: Sku
    period: int
    on_hand: int
    pipeline: int
    mean_forecast: float
    error_std: float
    lead_time: int
    offers: list[SupplierOffer]
    trend_boost: float = 0.0
    static_rop: int = 0
    static_order_up_to: int = 0
    max_stock: int = 0

    @property
    def position(self) -> int:
        return self.on_hand + self.pipeline


def compute_rop(mean: float, std: float, lead_time: float, z: float) -> int:
    """Reorder point: lead-time demand plus z-scaled demand uncertainty."""
    if min(mean, std, z) < 0 or lead_time < 1:
        raise ValueError("compute_rop inputs must be >= 0 with lead_time >= 1")
    return round_half_up(mean * lead_time + z * std * math.sqrt(lead_time))


def compute_eoq(demand_rate: float, fixed_cost: float, holding_cost: float) -> int:
    """Economic order quantity sqrt(2KD/h); demand_rate and holding_cost
    must share a time basis. Rounded half-up, at least one unit."""
    if holding_cost <= 0:
        raise ValueError("holding_cost must be > 0 (EOQ is unbounded otherwise)")
    if demand_rate <= 0:
        raise ValueError("demand_rate must be > 0")
    if fixed_cost < 0:
        raise ValueError("fixed_cost must be >= 0")
    return max(1, round_half_up(math.sqrt(2.0 * fixed_cost * demand_rate / holding_cost)))


def shortfall_criticality(view: SkuView, mean: float) -> float:
    """Stockout penalty avoided: p x expected lead-time shortfall below the
    current position, under a normal demand approximation."""
    lead = view.lead_time
    expected_short = normal_loss(mean * lead, view.error_std * math.sqrt(lead),
                                 float(view.position))
    return view.sku.stockout_penalty * expected_short


def monitor_flags(views: list[SkuView], params: PolicyParams) -> list[str]:
    """SKUs whose projected position over the monitor horizon dips below
    their reorder point, most critical first (ties by id)."""
    flagged = []
    for view in views:
        projected = view.position - view.mean_forecast * params.monitor_horizon
        rop = compute_rop(view.mean_forecast, view.error_std, view.lead_time, params.z)
        if projected < rop:
            criticality = view.sku.stockout_penalty * max(0.0, rop - projected)
            flagged.append((criticality, view.sku.id))
    flagged.sort(key=lambda item: (-item[0], item[1]))
    return [sku_id for _, sku_id in flagged]


def decide_static_rop(view: SkuView, params: PolicyParams) -> ReorderProposal:
    """Frozen thresholds from pre-run history: order up to S below the ROP."""
    quantity = 0
    if view.position < view.static_rop:
        quantity = max(0, view.static_order_up_to - view.position)
    return ReorderProposal(view.sku.id, quantity, needed_by=view.period + view.lead_time,
                           criticality=shortfall_criticality(view, view.mean_forecast),
                           rationale="static_rop")


def decide_rule80(view: SkuView, params: PolicyParams) -> ReorderProposal:
    """Refill to max stock once 80% depleted; one replenishment in flight at
    a time."""
    quantity = 0
    if view.pipeline == 0 and view.on_hand <= 0.2 * view.max_stock:
        quantity = max(0, view.max_stock - view.on_hand)
    return ReorderProposal(view.sku.id, quantity, needed_by=view.period + view.lead_time,
                           criticality=shortfall_criticality(view, view.mean_forecast),
                           rationale="rule80")


def decide_sq(view: SkuView, params: PolicyParams) -> ReorderProposal:
    """(s, Q): order the EOQ lot whenever position drops below the ROP."""
    quantity = 0
    if view.mean_forecast > 0:
        s = compute_rop(view.mean_forecast, view.error_std, view.lead_time, params.z)
        if view.position < s:
            quantity = compute_eoq(view.mean_forecast, params.order_fixed_cost,
                                   view.sku.holding_cost)
    return ReorderProposal(view.sku.id, quantity, needed_by=view.period + view.lead_time,
                           criticality=shortfall_criticality(view, view.mean_forecast),
                           rationale="sq")


def newsvendor_level(mean: float, std: float, holding: float, penalty: float,
                     protection: float) -> int:
    """Order-up-to level at the critical ratio p / (p + h*protection)."""
    if penalty <= 0:
        return 0
    overage = holding * protection
    ratio = MAX_CRITICAL_RATIO if overage <= 0 else min(
        MAX_CRITICAL_RATIO, penalty / (penalty + overage))
    z_ratio = norm_ppf(ratio)
    return max(0, round_half_up(mean * protection + z_ratio * std * math.sqrt(protection)))


def decide_newsvendor(view: SkuView, params: PolicyParams) -> ReorderProposal:
    protection = view.lead_time + params.review_period
    level = newsvendor_level(view.mean_forecast, view.error_std,
                             view.sku.holding_cost, view.sku.stockout_penalty, protection)
    quantity = max(0, level - view.position)
    return ReorderProposal(view.sku.id, quantity, needed_by=view.period + view.lead_time,
                           criticality=shortfall_criticality(view, view.mean_forecast),
                           rationale="newsvendor")


def decide_agentic(view: SkuView, params: PolicyParams) -> ReorderProposal:
    """Newsvendor order-up-to on a forecast inflated by the trend boost and,
    for perishables, by the effective-demand spoilage adjustment."""
    mean = view.mean_forecast * (1.0 + params.buffer_fraction * view.trend_boost)
    decay = min(view.sku.decay_fraction, MAX_DECAY_ADJUST)
    if decay > 0:
        mean /= (1.0 - decay)
    protection = view.lead_time + params.review_period
    level = newsvendor_level(mean, view.error_std, view.sku.holding_cost,
                             view.sku.stockout_penalty, protection)
    quantity = max(0, level - view.position)
    return ReorderProposal(view.sku.id, quantity, needed_by=view.period + view.lead_time,
                           criticality=shortfall_criticality(view, mean),
                           rationale="agentic")


DECIDERS = {
    "static_rop": decide_static_rop,
    "rule80": decide_rule80,
    "sq": decide_sq,
    "newsvendor": decide_newsvendor,
    "agentic": decide_agentic,
}


def decide(view: SkuView, params: PolicyParams) -> ReorderProposal:
    try:
        return DECIDERS[params.kind](view, params)
    except KeyError:
        raise ValueError(f"policy {params.kind!r} has no per-period decider") from None
