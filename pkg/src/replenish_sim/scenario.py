"""Scenario files: parsing, validation, scaling, and bundled benchmarks.

A scenario is a human-editable YAML document declaring the item master,
supplier catalog, demand and disruption models, policy/negotiation/score
parameters, global constraints, and optional trend candidates. Validation
is strict and complete: unknown fields are rejected, every cross-reference
is resolved, and *all* problems are reported at once, each tagged with the
section path that caused it.
"""

from __future__ import annotations

import copy
import hashlib
import math
from dataclasses import dataclass, field, fields
from importlib import resources
from pathlib import Path

import yaml

from .coordination import GlobalConstraints
from .core import CATEGORIES, Sku, SupplierOffer
from .demand import DEMAND_KINDS, NOISE_KINDS, DemandModel, DisruptionModel
from .forecast import FORECAST_METHODS, DEFAULT_ERROR_WINDOW
from .negotiation import NegotiationParams
from .numerics import is_cent_exact, round_half_up
from .policies import POLICY_KINDS, PolicyParams
from .supplier import SupplierScoreWeights
from .trend import GATE_MODES, GatePolicy

SCHEMA_VERSION = 1

BUNDLED = ("b0", "b1", "b2")

VOLUME_SHAPES = ("flat", "ramp", "spike_decay")


class ScenarioError(ValueError):
    """Raised with the full list of validation problems."""

    def __init__(self, errors: list[str]):
        self.errors = list(errors)
        super().__init__("scenario validation failed:\n  " + "\n  ".join(self.errors))


@dataclass
class ForecastConfig:
    method: str = "exp_smoothing"
    alpha: float = 0.3
    error_window: int = DEFAULT_ERROR_WINDOW
    ma_window: int = 7

    def __post_init__(self):
        if self.method not in FORECAST_METHODS:
            raise ValueError(f"unknown forecast method {self.method!r}")
        if not 0.0 < self.alpha <= 1.0:
            raise ValueError("alpha must be in (0, 1]")
        if self.error_window < 1 or self.ma_window < 1:
            raise ValueError("windows must be >= 1")


@dataclass
class TrendCandidate:
    sku: Sku
    demand: DemandModel
    offers: list[SupplierOffer]
    volume_series: list[float]
    sentiment: float = 0.0
    window: int = 7


@dataclass
class TrendConfig:
    conversion_factor: float = 0.1
    gate: GatePolicy = field(default_factory=GatePolicy)
    candidates: list[TrendCandidate] = field(default_factory=list)


@dataclass
class Scenario:
    name: str
    horizon: int
    warmup: int = 0
    master_seed: int = 0
    schema_version: int = SCHEMA_VERSION
    skus: dict[str, Sku] = field(default_factory=dict)
    demand_models: dict[str, DemandModel] = field(default_factory=dict)
    initial_stock: dict[str, int] = field(default_factory=dict)
    initial_unit_cost: dict[str, float] = field(default_factory=dict)
    offers: list[SupplierOffer] = field(default_factory=list)
    disruption: DisruptionModel = field(default_factory=DisruptionModel)
    policy: PolicyParams = field(default_factory=PolicyParams)
    forecast: ForecastConfig = field(default_factory=ForecastConfig)
    forecast_overrides: dict[str, ForecastConfig] = field(default_factory=dict)
    negotiation: NegotiationParams = field(default_factory=NegotiationParams)
    weights: SupplierScoreWeights = field(default_factory=SupplierScoreWeights)
    constraints: GlobalConstraints = field(default_factory=GlobalConstraints)
    trend: TrendConfig = field(default_factory=TrendConfig)
    source_hash: str = ""

    def offers_for(self, sku_id: str) -> list[SupplierOffer]:
        return [o for o in self.offers if o.sku_id == sku_id]

    def forecast_for(self, sku_id: str) -> ForecastConfig:
        return self.forecast_overrides.get(sku_id, self.forecast)


# --------------------------------------------------------------------------
# strict-mapping helpers

class _Validator:
    def __init__(self):
        self.errors: list[str] = []

    def fail(self, path: str, message: str) -> None:
        self.errors.append(f"{path}: {message}")

    def mapping(self, node, path: str, allowed: set[str], required: set[str] = frozenset()):
        if node is None:
            node = {}
        if not isinstance(node, dict):
            self.fail(path, f"expected a mapping, got {type(node).__name__}")
            return None
        unknown = sorted(set(node) - allowed)
        for key in unknown:
            self.fail(f"{path}.{key}", "unknown field")
        for key in sorted(required - set(node)):
            self.fail(f"{path}.{key}", "required field missing")
        return node

    def number(self, node, key: str, path: str, default=None, minimum=None, maximum=None,
               integer=False, cents=False, allow_none=False):
        if key not in node or node[key] is None:
            if key in node and node[key] is None and allow_none:
                return None
            return default
        value = node[key]
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            self.fail(f"{path}.{key}", f"expected a number, got {value!r}")
            return default
        if integer and not float(value).is_integer():
            self.fail(f"{path}.{key}", f"expected an integer, got {value!r}")
            return default
        if minimum is not None and value < minimum:
            self.fail(f"{path}.{key}", f"must be >= {minimum}, got {value}")
            return default
        if maximum is not None and value > maximum:
            self.fail(f"{path}.{key}", f"must be <= {maximum}, got {value}")
            return default
        if cents and not is_cent_exact(float(value)):
            self.fail(f"{path}.{key}", f"currency must be whole cents, got {value}")
            return default
        return int(value) if integer else float(value)

    def text(self, node, key: str, path: str, default=None, choices=None):
        if key not in node or node[key] is None:
            return default
        value = node[key]
        if not isinstance(value, str):
            self.fail(f"{path}.{key}", f"expected a string, got {value!r}")
            return default
        if choices is not None and value not in choices:
            self.fail(f"{path}.{key}", f"must be one of {', '.join(choices)}; got {value!r}")
            return default
        return value

    def flag(self, node, key: str, path: str, default=False):
        if key not in node or node[key] is None:
            return default
        value = node[key]
        if not isinstance(value, bool):
            self.fail(f"{path}.{key}", f"expected true/false, got {value!r}")
            return default
        return value


_DEMAND_FIELDS = {"kind", "mean", "cv", "season_period", "season_amplitude",
                  "trend_slope", "noise"}
_SKU_FIELDS = {"id", "category", "holding_cost", "stockout_penalty", "decay_fraction",
               "shelf_life", "unit_margin", "initial_stock", "initial_unit_cost",
               "demand", "forecast"}
_OFFER_FIELDS = {"supplier_id", "sku_id", "unit_cost", "lead_time", "moq",
                 "capacity_per_order", "reliability", "fixed_shipping", "max_discount"}
_FORECAST_FIELDS = {"method", "alpha", "error_window", "ma_window"}
_VOLUME_FIELDS = {"shape", "start", "slope", "peak", "peak_period", "decay", "series"}
_CANDIDATE_FIELDS = (_SKU_FIELDS - {"initial_stock", "initial_unit_cost", "forecast"}) | {
    "sentiment", "window", "volume", "offers"}


def _parse_demand(v: _Validator, node, path: str) -> DemandModel | None:
    node = v.mapping(node, path, _DEMAND_FIELDS, required={"mean"})
    if node is None:
        return None
    kind = v.text(node, "kind", path, default="stationary", choices=DEMAND_KINDS)
    model = dict(
        kind=kind or "stationary",
        mean=v.number(node, "mean", path, default=0.0, minimum=0.0),
        cv=v.number(node, "cv", path, default=0.0, minimum=0.0),
        season_period=v.number(node, "season_period", path, default=7, minimum=1, integer=True),
        season_amplitude=v.number(node, "season_amplitude", path, default=0.0, minimum=0.0),
        trend_slope=v.number(node, "trend_slope", path, default=0.0),
        noise=v.text(node, "noise", path, default="gaussian", choices=NOISE_KINDS) or "gaussian",
    )
    try:
        return DemandModel(**model)
    except ValueError as exc:
        v.fail(path, str(exc))
        return None


def _parse_sku(v: _Validator, node, path: str, allowed: set[str]) -> dict | None:
    node = v.mapping(node, path, allowed, required={"id", "demand"})
    if node is None:
        return None
    sku_id = v.text(node, "id", path)
    if not sku_id:
        v.fail(f"{path}.id", "sku id must be a non-empty string")
        return None
    spec = dict(
        id=sku_id,
        category=v.text(node, "category", path, default="other", choices=CATEGORIES) or "other",
        holding_cost=v.number(node, "holding_cost", path, default=0.0, minimum=0.0, cents=True),
        stockout_penalty=v.number(node, "stockout_penalty", path, default=0.0,
                                  minimum=0.0, cents=True),
        decay_fraction=v.number(node, "decay_fraction", path, default=0.0,
                                minimum=0.0, maximum=1.0),
        shelf_life=v.number(node, "shelf_life", path, default=None, minimum=1,
                            integer=True, allow_none=True),
        unit_margin=v.number(node, "unit_margin", path, default=0.0, minimum=0.0, cents=True),
    )
    try:
        sku = Sku(**spec)
    except ValueError as exc:
        v.fail(path, str(exc))
        return None
    demand = _parse_demand(v, node.get("demand"), f"{path}.demand")
    out = dict(
        sku=sku,
        demand=demand,
        initial_stock=v.number(node, "initial_stock", path, default=0, minimum=0, integer=True),
        initial_unit_cost=v.number(node, "initial_unit_cost", path, default=None,
                                   minimum=0.0, cents=True, allow_none=True),
        node=node,
    )
    return out


def _parse_offer(v: _Validator, node, path: str, sku_id: str | None = None):
    required = {"supplier_id", "unit_cost", "lead_time"}
    if sku_id is None:
        required = required | {"sku_id"}
    node = v.mapping(node, path, _OFFER_FIELDS, required=required)
    if node is None:
        return None
    spec = dict(
        supplier_id=v.text(node, "supplier_id", path) or "",
        sku_id=sku_id or v.text(node, "sku_id", path) or "",
        unit_cost=v.number(node, "unit_cost", path, default=1.0, minimum=0.0, cents=True),
        lead_time=v.number(node, "lead_time", path, default=1, minimum=1, integer=True),
        moq=v.number(node, "moq", path, default=0, minimum=0, integer=True),
        capacity_per_order=v.number(node, "capacity_per_order", path, default=None,
                                    minimum=1, integer=True, allow_none=True),
        reliability=v.number(node, "reliability", path, default=1.0, minimum=0.0, maximum=1.0),
        fixed_shipping=v.number(node, "fixed_shipping", path, default=0.0,
                                minimum=0.0, cents=True),
        max_discount=v.number(node, "max_discount", path, default=0.0,
                              minimum=0.0, maximum=0.999),
    )
    if not spec["supplier_id"]:
        v.fail(f"{path}.supplier_id", "must be a non-empty string")
        return None
    try:
        return SupplierOffer(**spec)
    except ValueError as exc:
        v.fail(path, str(exc))
        return None


def _parse_forecast(v: _Validator, node, path: str) -> ForecastConfig | None:
    node = v.mapping(node, path, _FORECAST_FIELDS)
    if node is None:
        return None
    spec = dict(
        method=v.text(node, "method", path, default="exp_smoothing",
                      choices=FORECAST_METHODS) or "exp_smoothing",
        alpha=v.number(node, "alpha", path, default=0.3, minimum=1e-9, maximum=1.0),
        error_window=v.number(node, "error_window", path, default=DEFAULT_ERROR_WINDOW,
                              minimum=1, integer=True),
        ma_window=v.number(node, "ma_window", path, default=7, minimum=1, integer=True),
    )
    try:
        return ForecastConfig(**spec)
    except ValueError as exc:
        v.fail(path, str(exc))
        return None


def _materialize_volume(v: _Validator, node, path: str, horizon: int) -> list[float]:
    node = v.mapping(node, path, _VOLUME_FIELDS)
    if node is None:
        return [0.0] * horizon
    if "series" in node and node["series"] is not None:
        series = node["series"]
        if not isinstance(series, list) or not all(
                isinstance(x, (int, float)) and not isinstance(x, bool) for x in series):
            v.fail(f"{path}.series", "expected a list of numbers")
            return [0.0] * horizon
        if any(x < 0 for x in series):
            v.fail(f"{path}.series", "volumes must be non-negative")
        values = [float(x) for x in series]
        if len(values) < horizon:
            values = values + [values[-1] if values else 0.0] * (horizon - len(values))
        return values[:horizon]
    shape = v.text(node, "shape", path, default="flat", choices=VOLUME_SHAPES) or "flat"
    start = v.number(node, "start", path, default=0.0, minimum=0.0)
    slope = v.number(node, "slope", path, default=0.0)
    peak = v.number(node, "peak", path, default=0.0, minimum=0.0)
    peak_period = v.number(node, "peak_period", path, default=max(1, horizon // 3),
                           minimum=1, integer=True)
    decay = v.number(node, "decay", path, default=0.05, minimum=0.0)
    series = []
    for t in range(horizon):
        if shape == "ramp":
            value = start + slope * t
        elif shape == "spike_decay":
            if t <= peak_period:
                value = start + peak * (t / peak_period)
            else:
                value = start + peak * math.exp(-decay * (t - peak_period))
        else:
            value = start
        series.append(max(0.0, value))
    return series


_TOP_FIELDS = {"schema_version", "meta", "skus", "offers", "disruptions", "policy",
               "forecast", "negotiation", "weights", "constraints", "trend"}
_META_FIELDS = {"name", "horizon", "warmup", "master_seed"}
_DISRUPTION_FIELDS = {"delay_probability", "delay_extra", "shortage_probability",
                      "shortage_fill", "shock_probability", "shock_multiplier"}
_POLICY_FIELDS = {"kind", "z", "review_period", "order_fixed_cost", "buffer_fraction",
                  "monitor_horizon"}
_NEGOTIATION_FIELDS = {"max_rounds", "buyer_opening_discount", "buyer_concession_step",
                       "supplier_concession_rate", "quantity_ref", "jitter"}
_WEIGHT_FIELDS = {"cost", "lead", "reliability"}
_CONSTRAINT_FIELDS = {"budget_per_period", "warehouse_capacity", "max_orders_per_period"}
_TREND_FIELDS = {"conversion_factor", "gate", "candidates"}
_GATE_FIELDS = {"threshold", "persistence", "mode", "approved"}


def build_scenario(doc: dict, name: str = "scenario", source_bytes: bytes = b"") -> Scenario:
    """Validate a parsed YAML document and build the Scenario, or raise
    ScenarioError carrying every problem found."""
    v = _Validator()
    doc = v.mapping(doc, "scenario", _TOP_FIELDS, required={"meta", "skus", "offers"})
    if doc is None:
        raise ScenarioError(v.errors)

    version = v.number(doc, "schema_version", "scenario", default=SCHEMA_VERSION, integer=True)
    if version != SCHEMA_VERSION:
        v.fail("scenario.schema_version", f"unsupported version {version}; "
               f"this build reads version {SCHEMA_VERSION}")

    meta = v.mapping(doc.get("meta"), "meta", _META_FIELDS, required={"horizon"}) or {}
    horizon = v.number(meta, "horizon", "meta", default=1, minimum=1, integer=True)
    warmup = v.number(meta, "warmup", "meta", default=0, minimum=0, integer=True)
    master_seed = v.number(meta, "master_seed", "meta", default=0, minimum=0, integer=True)
    name = v.text(meta, "name", "meta", default=name) or name
    if warmup >= horizon:
        v.fail("meta.warmup", f"warmup ({warmup}) must be smaller than horizon ({horizon})")

    skus: dict[str, Sku] = {}
    demand_models: dict[str, DemandModel] = {}
    initial_stock: dict[str, int] = {}
    initial_unit_cost: dict[str, float] = {}
    forecast_overrides: dict[str, ForecastConfig] = {}
    sku_nodes = doc.get("skus") or []
    if not isinstance(sku_nodes, list):
        v.fail("skus", "expected a list")
        sku_nodes = []
    for i, node in enumerate(sku_nodes):
        parsed = _parse_sku(v, node, f"skus[{i}]", _SKU_FIELDS)
        if parsed is None:
            continue
        sku = parsed["sku"]
        if sku.id in skus:
            v.fail(f"skus[{i}].id", f"duplicate sku id {sku.id!r}")
            continue
        skus[sku.id] = sku
        if parsed["demand"] is not None:
            demand_models[sku.id] = parsed["demand"]
        initial_stock[sku.id] = parsed["initial_stock"]
        if parsed["initial_unit_cost"] is not None:
            initial_unit_cost[sku.id] = parsed["initial_unit_cost"]
        if "forecast" in parsed["node"]:
            override = _parse_forecast(v, parsed["node"]["forecast"], f"skus[{i}].forecast")
            if override is not None:
                forecast_overrides[sku.id] = override

    offers: list[SupplierOffer] = []
    seen_offer_keys = set()
    offer_nodes = doc.get("offers") or []
    if not isinstance(offer_nodes, list):
        v.fail("offers", "expected a list")
        offer_nodes = []
    for i, node in enumerate(offer_nodes):
        offer = _parse_offer(v, node, f"offers[{i}]")
        if offer is None:
            continue
        if offer.sku_id not in skus:
            v.fail(f"offers[{i}].sku_id",
                   f"offer from supplier {offer.supplier_id!r} references "
                   f"unknown sku {offer.sku_id!r}")
            continue
        if offer.key() in seen_offer_keys:
            v.fail(f"offers[{i}]", f"duplicate offer {offer.key()!r}")
            continue
        seen_offer_keys.add(offer.key())
        offers.append(offer)

    for sku_id in sorted(skus):
        if not any(o.sku_id == sku_id for o in offers):
            v.fail("offers", f"sku {sku_id!r} has no supplier offer")

    disruption = _build(v, DisruptionModel, doc.get("disruptions"), "disruptions",
                        _DISRUPTION_FIELDS, {
        "delay_probability": dict(default=0.0, minimum=0.0, maximum=1.0),
        "delay_extra": dict(default=1, minimum=1, integer=True),
        "shortage_probability": dict(default=0.0, minimum=0.0, maximum=1.0),
        "shortage_fill": dict(default=0.0, minimum=0.0, maximum=0.999),
        "shock_probability": dict(default=0.0, minimum=0.0, maximum=1.0),
        "shock_multiplier": dict(default=1.0, minimum=0.0),
    }) or DisruptionModel()

    policy_node = v.mapping(doc.get("policy"), "policy", _POLICY_FIELDS) or {}
    policy_spec = dict(
        kind=v.text(policy_node, "kind", "policy", default="agentic", choices=POLICY_KINDS)
        or "agentic",
        z=v.number(policy_node, "z", "policy", default=1.645, minimum=0.0),
        review_period=v.number(policy_node, "review_period", "policy", default=1,
                               minimum=1, integer=True),
        order_fixed_cost=v.number(policy_node, "order_fixed_cost", "policy", default=0.0,
                                  minimum=0.0, cents=True),
        buffer_fraction=v.number(policy_node, "buffer_fraction", "policy",
                                 default=0.0, minimum=0.0),
        monitor_horizon=v.number(policy_node, "monitor_horizon", "policy", default=1,
                                 minimum=0, integer=True),
    )
    policy = _try(v, PolicyParams, policy_spec, "policy") or PolicyParams()

    forecast = _parse_forecast(v, doc.get("forecast"), "forecast") or ForecastConfig()

    negotiation = _build(v, NegotiationParams, doc.get("negotiation"), "negotiation",
                         _NEGOTIATION_FIELDS, {
        "max_rounds": dict(default=6, minimum=0, integer=True),
        "buyer_opening_discount": dict(default=0.15, minimum=0.0, maximum=1.0),
        "buyer_concession_step": dict(default=0.01, minimum=0.0, maximum=1.0),
        "supplier_concession_rate": dict(default=0.5, minimum=0.0, maximum=1.0),
        "quantity_ref": dict(default=100, minimum=1, integer=True),
        "jitter": dict(default=0.0, minimum=0.0, maximum=1.0),
    }) or NegotiationParams()

    weights = _build(v, SupplierScoreWeights, doc.get("weights"), "weights",
                     _WEIGHT_FIELDS, {
        "cost": dict(default=0.5, minimum=0.0, maximum=1.0),
        "lead": dict(default=0.25, minimum=0.0, maximum=1.0),
        "reliability": dict(default=0.25, minimum=0.0, maximum=1.0),
    }) or SupplierScoreWeights()

    constraints = _build(v, GlobalConstraints, doc.get("constraints"), "constraints",
                         _CONSTRAINT_FIELDS, {
        "budget_per_period": dict(default=None, minimum=0.0, cents=True, allow_none=True),
        "warehouse_capacity": dict(default=None, minimum=0, integer=True, allow_none=True),
        "max_orders_per_period": dict(default=None, minimum=0, integer=True, allow_none=True),
    }) or GlobalConstraints()

    trend = _parse_trend(v, doc.get("trend"), horizon, skus)

    if v.errors:
        raise ScenarioError(v.errors)

    return Scenario(
        name=name, horizon=horizon, warmup=warmup, master_seed=master_seed,
        schema_version=SCHEMA_VERSION, skus=skus, demand_models=demand_models,
        initial_stock=initial_stock, initial_unit_cost=initial_unit_cost, offers=offers,
        disruption=disruption, policy=policy, forecast=forecast,
        forecast_overrides=forecast_overrides, negotiation=negotiation, weights=weights,
        constraints=constraints, trend=trend,
        source_hash=hashlib.sha256(source_bytes).hexdigest(),
    )


def _build(v: _Validator, cls, node, path: str, allowed: set[str], rules: dict):
    node = v.mapping(node, path, allowed)
    if node is None:
        return None
    spec = {key: v.number(node, key, path, **rule) for key, rule in rules.items()}
    return _try(v, cls, spec, path)


def _try(v: _Validator, cls, spec: dict, path: str):
    try:
        return cls(**spec)
    except ValueError as exc:
        v.fail(path, str(exc))
        return None


def _parse_trend(v: _Validator, node, horizon: int, skus: dict[str, Sku]) -> TrendConfig:
    node = v.mapping(node, "trend", _TREND_FIELDS)
    if node is None or not node:
        return TrendConfig()
    conversion = v.number(node, "conversion_factor", "trend", default=0.1, minimum=0.0)
    gate_node = v.mapping(node.get("gate"), "trend.gate", _GATE_FIELDS) or {}
    gate_spec = dict(
        threshold=v.number(gate_node, "threshold", "trend.gate", default=0.6),
        persistence=v.number(gate_node, "persistence", "trend.gate", default=2,
                             minimum=1, integer=True),
        mode=v.text(gate_node, "mode", "trend.gate", default="auto",
                    choices=GATE_MODES) or "auto",
        approved=v.flag(gate_node, "approved", "trend.gate", default=False),
    )
    gate = _try(v, GatePolicy, gate_spec, "trend.gate") or GatePolicy()

    candidates: list[TrendCandidate] = []
    nodes = node.get("candidates") or []
    if not isinstance(nodes, list):
        v.fail("trend.candidates", "expected a list")
        nodes = []
    for i, cand_node in enumerate(nodes):
        path = f"trend.candidates[{i}]"
        parsed = _parse_sku(v, cand_node, path, _CANDIDATE_FIELDS)
        if parsed is None:
            continue
        sku = parsed["sku"]
        if sku.id in skus or any(c.sku.id == sku.id for c in candidates):
            v.fail(f"{path}.id", f"duplicate sku id {sku.id!r}")
            continue
        cand_offers = []
        for j, offer_node in enumerate(parsed["node"].get("offers") or []):
            offer = _parse_offer(v, offer_node, f"{path}.offers[{j}]", sku_id=sku.id)
            if offer is not None:
                cand_offers.append(offer)
        if not cand_offers:
            v.fail(f"{path}.offers", f"candidate {sku.id!r} has no supplier offer")
        volume = _materialize_volume(v, parsed["node"].get("volume"), f"{path}.volume", horizon)
        sentiment = v.number(parsed["node"], "sentiment", path, default=0.0,
                             minimum=-1.0, maximum=1.0)
        window = v.number(parsed["node"], "window", path, default=7, minimum=2, integer=True)
        if parsed["demand"] is None:
            continue
        candidates.append(TrendCandidate(
            sku=sku, demand=parsed["demand"], offers=cand_offers, volume_series=volume,
            sentiment=sentiment, window=window))
    return TrendConfig(conversion_factor=conversion, gate=gate, candidates=candidates)


def parse_scenario(path: str | Path) -> Scenario:
    """Load and fully validate a scenario file (or a bundled name: b0/b1/b2)."""
    raw = _read_source(path)
    try:
        doc = yaml.safe_load(raw)
    except yaml.YAMLError as exc:
        raise ScenarioError([f"scenario: not valid YAML ({exc})"]) from exc
    if doc is None:
        raise ScenarioError(["scenario: file is empty"])
    return build_scenario(doc, name=Path(str(path)).stem, source_bytes=raw)


def _read_source(path: str | Path) -> bytes:
    name = str(path)
    if name in BUNDLED:
        return bundled_scenario_bytes(name)
    p = Path(path)
    if not p.exists():
        raise ScenarioError([f"scenario: file not found: {p}"])
    return p.read_bytes()


def bundled_scenario_bytes(name: str) -> bytes:
    filename = {"b0": "b0_micro.yaml", "b1": "b1_mixed_mart.yaml", "b2": "b2_trend.yaml"}[name]
    return resources.files("replenish_sim.scenarios").joinpath(filename).read_bytes()


def scale_scenario(scenario: Scenario, demand_factor: float, lead_factor: float) -> Scenario:
    """Scaled copy: demand means multiplied, lead times rescaled with
    round-half-up (min 1), everything else untouched."""
    for factor, label in ((demand_factor, "demand_factor"), (lead_factor, "lead_factor")):
        if not 0.5 <= factor <= 1.5:
            raise ValueError(f"{label} must be in [0.5, 1.5], got {factor}")
    scaled = copy.deepcopy(scenario)
    for model in scaled.demand_models.values():
        model.mean *= demand_factor
    for candidate in scaled.trend.candidates:
        candidate.demand.mean *= demand_factor
    for offer in scaled.offers:
        offer.lead_time = max(1, round_half_up(offer.lead_time * lead_factor))
    for candidate in scaled.trend.candidates:
        for offer in candidate.offers:
            offer.lead_time = max(1, round_half_up(offer.lead_time * lead_factor))
    if demand_factor != 1.0 or lead_factor != 1.0:
        scaled.name = f"{scenario.name}@d{demand_factor:g}l{lead_factor:g}"
    return scaled
