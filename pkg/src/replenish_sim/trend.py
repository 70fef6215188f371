"""Market-signal scoring and adoption gating for candidate SKUs.

Signals are synthetic search-volume series plus a sentiment score. The
score blends a scale-free normalized slope (least squares over the last W
points, divided by the window mean) with rescaled sentiment; adoption
requires the score to clear the gate threshold for a run of consecutive
periods, or a simulated human approval when the gate is in queue mode.
"""

from __future__ import annotations

from dataclasses import dataclass, field

SCORE_SLOPE_WEIGHT = 0.7
SCORE_SENTIMENT_WEIGHT = 0.3
SLOPE_REF = 0.25

GATE_MODES = ("auto", "human_queue")

ADOPT = "adopt"
QUEUE = "queue_for_human"
REJECT = "reject"


@dataclass
class TrendSignal:
    candidate_sku_id: str
    volume_series: list[float]
    sentiment: float = 0.0
    window: int = 7

    def __post_init__(self):
        if not -1.0 <= self.sentiment <= 1.0:
            raise ValueError("sentiment must be in [-1, 1]")
        if self.window < 2:
            raise ValueError("window must be >= 2")
        if any(v < 0 for v in self.volume_series):
            raise ValueError("volume series must be non-negative")


@dataclass
class GatePolicy:
    threshold: float = 0.6
    persistence: int = 2
    mode: str = "auto"
    approved: bool = False  # simulated human verdict for human_queue mode

    def __post_init__(self):
        if self.persistence < 1:
            raise ValueError("persistence must be >= 1")
        if self.mode not in GATE_MODES:
            raise ValueError(f"unknown gate mode {self.mode!r}")


def least_squares_slope(values: list[float]) -> float:
    n = len(values)
    x_mean = (n - 1) / 2.0
    y_mean = sum(values) / n
    sxy = sum((i - x_mean) * (v - y_mean) for i, v in enumerate(values))
    sxx = sum((i - x_mean) ** 2 for i in range(n))
    return sxy / sxx


def trend_score(signal: TrendSignal,
                slope_weight: float = SCORE_SLOPE_WEIGHT,
                sentiment_weight: float = SCORE_SENTIMENT_WEIGHT,
                slope_ref: float = SLOPE_REF) -> float:
    """Score >= 0; invariant under positive rescaling of the volume series."""
    if len(signal.volume_series) < signal.window:
        raise ValueError(
            f"volume series shorter than window ({len(signal.volume_series)} < {signal.window})")
    recent = signal.volume_series[-signal.window:]
    mean = sum(recent) / len(recent)
    slope = least_squares_slope(recent)
    normalized = max(0.0, slope / mean) if mean > 0 else 0.0
    return (slope_weight * min(1.0, normalized / slope_ref)
            + sentiment_weight * (signal.sentiment + 1.0) / 2.0)


def gate_adopt(scores_history: list[float], gate: GatePolicy) -> str:
    """Adoption decision from the trailing score history."""
    if len(scores_history) < gate.persistence:
        return REJECT
    streak = scores_history[-gate.persistence:]
    if not all(s >= gate.threshold for s in streak):
        return REJECT
    if gate.mode == "human_queue":
        return ADOPT if gate.approved else QUEUE
    return ADOPT


@dataclass
class SkuRoi:
    sku_id: str
    revenue: float
    cost: float
    roi: float | None  # None when cost was zero (undefined, flagged)


@dataclass
class TrendRoiReport:
    per_sku: list[SkuRoi] = field(default_factory=list)
    aggregate_roi: float = 0.0
    aggregate_profit: float = 0.0
    top_quartile_fraction: float = 0.0
    adopted: list[str] = field(default_factory=list)


def trend_roi(adopted_stats: dict[str, tuple[float, float]],
              sales_by_sku: dict[str, int]) -> TrendRoiReport:
    """ROI per adopted SKU and in aggregate.

    adopted_stats maps sku id -> (margin revenue, attributed total cost);
    sales_by_sku covers every SKU in the run and defines the top-quartile
    ranking (units sold, ties by id).
    """
    report = TrendRoiReport(adopted=sorted(adopted_stats))
    total_revenue = 0.0
    total_cost = 0.0
    for sku_id in report.adopted:
        revenue, cost = adopted_stats[sku_id]
        roi = (revenue - cost) / cost if cost > 0 else None
        report.per_sku.append(SkuRoi(sku_id, revenue, cost, roi))
        total_revenue += revenue
        total_cost += cost
    report.aggregate_profit = total_revenue - total_cost
    report.aggregate_roi = (total_revenue - total_cost) / total_cost if total_cost > 0 else 0.0
    if report.adopted and sales_by_sku:
        ranked = sorted(sales_by_sku, key=lambda s: (-sales_by_sku[s], s))
        quartile = max(1, -(-len(ranked) // 4))  # ceil(n/4)
        top = set(ranked[:quartile])
        hits = sum(1 for sku_id in report.adopted if sku_id in top)
        report.top_quartile_fraction = hits / len(report.adopted)
    return report
