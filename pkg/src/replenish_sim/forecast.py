"""Demand forecasting: point forecasts plus one-step error statistics.

The error std feeding reorder-point math comes from a rolling RMSE of
one-step-ahead forecast errors, not from raw demand variance; before the
window fills, a conservative cold-start of half the current level is used
so safety stock exists from day one.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field

FORECAST_METHODS = ("naive", "moving_average", "exp_smoothing", "seasonal_naive")

DEFAULT_ERROR_WINDOW = 30


def exp_smoothing_update(forecast: float, observation: float, alpha: float) -> float:
    """One exponential-smoothing step: alpha*obs + (1-alpha)*forecast."""
    if not 0.0 < alpha <= 1.0:
        raise ValueError(f"alpha must be in (0, 1], got {alpha}")
    return alpha * observation + (1.0 - alpha) * forecast


def seasonal_naive(history: list[float], season_period: int) -> tuple[float, bool]:
    """Forecast for t+1 = observation one season back; falls back to plain
    naive (last observation) when history is too short. Returns
    (forecast, fell_back)."""
    if season_period < 1:
        raise ValueError("season_period must be >= 1")
    if not history:
        return 0.0, True
    if len(history) < season_period:
        return history[-1], True
    return history[-season_period], False


def rolling_rmse(errors) -> float:
    if not errors:
        return 0.0
    return math.sqrt(sum(e * e for e in errors) / len(errors))


@dataclass
class ForecastState:
    """Per-SKU forecaster state; the engine owns one per tracked SKU."""

    method: str = "exp_smoothing"
    alpha: float = 0.3
    ma_window: int = 7
    season_period: int = 7
    error_window: int = DEFAULT_ERROR_WINDOW
    level: float = 0.0
    initialized: bool = False
    clamped: bool = False
    fell_back: bool = False
    history: deque = field(default_factory=lambda: deque(maxlen=400))
    errors: deque = field(default_factory=lambda: deque(maxlen=DEFAULT_ERROR_WINDOW))

    def __post_init__(self):
        if self.method not in FORECAST_METHODS:
            raise ValueError(f"unknown forecast method {self.method!r}")
        if self.errors.maxlen != self.error_window:
            self.errors = deque(self.errors, maxlen=self.error_window)

    @property
    def mean_estimate(self) -> float:
        """Point forecast for the next period, clamped at zero."""
        value = self.level
        if self.method == "seasonal_naive":
            value, self.fell_back = seasonal_naive(list(self.history), self.season_period)
        elif self.method == "moving_average" and self.history:
            window = list(self.history)[-self.ma_window:]
            value = sum(window) / len(window)
        if value < 0:
            self.clamped = True
            return 0.0
        return value

    @property
    def error_std(self) -> float:
        """Rolling one-step RMSE; cold start = 0.5 * level until the window
        has filled once."""
        if len(self.errors) < self.error_window:
            return 0.5 * max(0.0, self.mean_estimate)
        return rolling_rmse(self.errors)

    def observe(self, actual: float) -> None:
        """Record one period's actual demand: update error stats against the
        forecast that was in force, then update the level/history."""
        if not self.initialized:
            self.level = actual
            self.initialized = True
            self.history.append(actual)
            return
        forecast = self.mean_estimate
        self.errors.append(actual - forecast)
        if self.method == "naive":
            self.level = actual
        elif self.method == "exp_smoothing":
            self.level = exp_smoothing_update(self.level, actual, self.alpha)
        self.history.append(actual)

    def prime(self, history: list[int]) -> None:
        """Replay a calibration trace so level and error stats are warm at
        period zero."""
        for value in history:
            self.observe(value)


def update_error_stats(state: ForecastState, forecast: float, actual: float) -> ForecastState:
    """Push one explicit (forecast, actual) pair into the error window."""
    state.errors.append(actual - forecast)
    return state
