"""Stochastic demand traces, order disruptions, and seeded RNG streams.

Traces are pure functions of (model, horizon, stream): the same master
seed and label always reproduce the same integer series, and distinct
labels are independent, so policies compared under common random numbers
cannot perturb each other's draws.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import OrderDecision, SupplierOffer
from .numerics import derive_seed, round_half_up

DEMAND_KINDS = ("stationary", "seasonal", "trending")
NOISE_KINDS = ("gaussian", "poisson")


@dataclass(frozen=True)
class RngStream:
    """A labeled, reproducible random stream split off a master seed."""

    master_seed: int
    label: str

    def generator(self) -> np.random.Generator:
        return np.random.Generator(np.random.PCG64(derive_seed(self.master_seed, self.label)))


@dataclass
class DemandModel:
    """Per-SKU demand process: stationary, seasonal, or trending mean with
    discrete noise (truncated-gaussian rounded, or poisson)."""

    kind: str = "stationary"
    mean: float = 0.0
    cv: float = 0.0
    season_period: int = 7
    season_amplitude: float = 0.0
    trend_slope: float = 0.0
    noise: str = "gaussian"

    def __post_init__(self):
        if self.kind not in DEMAND_KINDS:
            raise ValueError(f"unknown demand kind {self.kind!r}")
        if self.noise not in NOISE_KINDS:
            raise ValueError(f"unknown noise kind {self.noise!r}")
        if self.mean < 0:
            raise ValueError("demand mean must be >= 0")
        if self.cv < 0:
            raise ValueError("demand cv must be >= 0")
        if self.season_period < 1:
            raise ValueError("season_period must be >= 1")

    def mean_at(self, t: int) -> float:
        """Deterministic mean curve m(t), clamped at zero."""
        if self.kind == "seasonal":
            m = self.mean * (1.0 + self.season_amplitude
                             * math.sin(2.0 * math.pi * t / self.season_period))
        elif self.kind == "trending":
            m = self.mean + self.trend_slope * t
        else:
            m = self.mean
        return max(0.0, m)


def generate_trace(model: DemandModel, horizon: int, stream: RngStream) -> list[int]:
    """Draw a non-negative integer demand trace of length `horizon`.

    cv == 0 yields exactly the rounded clamped mean curve for either noise
    kind, so zero-noise scenarios are hand-checkable.
    """
    if horizon < 1:
        raise ValueError("horizon must be >= 1")
    means = [model.mean_at(t) for t in range(horizon)]
    if model.cv == 0.0:
        return [round_half_up(m) for m in means]
    gen = stream.generator()
    trace = []
    if model.noise == "poisson":
        for m in means:
            trace.append(int(gen.poisson(m)) if m > 0 else 0)
    else:
        for m in means:
            draw = gen.normal(m, model.cv * m) if m > 0 else 0.0
            trace.append(max(0, round_half_up(draw)))
    return trace


@dataclass
class DisruptionModel:
    """Random order disturbances; delay/shortage odds scale with the
    supplier's unreliability (1 - reliability)."""

    delay_probability: float = 0.0
    delay_extra: int = 1
    shortage_probability: float = 0.0
    shortage_fill: float = 1.0
    shock_probability: float = 0.0
    shock_multiplier: float = 1.0

    def __post_init__(self):
        for name in ("delay_probability", "shortage_probability", "shock_probability"):
            p = getattr(self, name)
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"{name} must be in [0, 1]")
        if self.delay_extra < 1:
            raise ValueError("delay_extra must be >= 1")
        if not 0.0 <= self.shortage_fill < 1.0:
            raise ValueError("shortage_fill must be in [0, 1)")
        if self.shock_multiplier < 0:
            raise ValueError("shock_multiplier must be >= 0")

    @property
    def active(self) -> bool:
        return (self.delay_probability > 0 or self.shortage_probability > 0
                or self.shock_probability > 0)


def order_stream(master_seed: int, sku_id: str, supplier_id: str, placed_at: int) -> RngStream:
    """Stream for one order's disruption draw. Keyed by the order's
    identity so a replayed (or counterfactual) order sees the same fate."""
    return RngStream(master_seed, f"order/{sku_id}/{supplier_id}/{placed_at}")


def perturb_order(order: OrderDecision, offer: SupplierOffer,
                  disruption: DisruptionModel, stream: RngStream) -> tuple[int, int]:
    """Realize (arrival_period, delivered_quantity) for a committed order."""
    arrival = order.promised_arrival
    delivered = order.quantity
    unreliability = 1.0 - offer.reliability
    if unreliability <= 0.0 or not disruption.active:
        return arrival, delivered
    gen = stream.generator()
    delay_draw = gen.random()
    shortage_draw = gen.random()
    if delay_draw < disruption.delay_probability * unreliability:
        arrival += disruption.delay_extra
    if shortage_draw < disruption.shortage_probability * unreliability:
        delivered = int(math.floor(disruption.shortage_fill * order.quantity))
    return arrival, delivered


def apply_demand_shocks(trace: list[int], disruption: DisruptionModel,
                        stream: RngStream) -> list[int]:
    """Scale random periods of a trace by the shock multiplier (promotion
    stand-in). Pure in (trace, model, stream)."""
    if disruption.shock_probability <= 0.0:
        return list(trace)
    gen = stream.generator()
    out = []
    for d in trace:
        if gen.random() < disruption.shock_probability:
            out.append(max(0, round_half_up(d * disruption.shock_multiplier)))
        else:
            out.append(d)
    return out
