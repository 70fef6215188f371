"""Perfect-foresight planning: the clairvoyant cost bound.

The oracle alone sees the realized demand trace (and, because disruption
draws are a pure function of an order's identity, the realized fate of any
order it considers). Per SKU it solves a just-in-time covering problem:
each candidate action lands one shipment that exactly covers a contiguous
run of future periods (minimal quantity under FIFO + spoilage dynamics,
rounded up to the supplier's MOQ), priced through the same negotiation
machinery the live policies use. Not ordering and eating the stockout
penalty is always an option, so unprofitable demand is skipped rather than
chased.

The search is a depth-first recursion memoized on (period, batch state),
with all costs in integer cents under exactly the ledger's accounting
rules, so a plan's predicted cost matches the simulated episode line for
line. For durable SKUs with an on-time, in-full shipment the span costs
come from one no-arrival baseline simulation per state (existing stock
drains FIFO ahead of the fresh batch either way); perishables and
disrupted shipments take a generic simulate-and-bisect path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import OrderDecision, Sku, SupplierOffer
from .demand import DisruptionModel, order_stream, perturb_order
from .negotiation import NegotiationParams, negotiate
from .numerics import to_cents

SPAN_CAP = 28        # longest run of periods one shipment may cover
DECAY_SPAN_CAP = 10  # perishables take the quadratic path; keep spans short

_BIG = 10 ** 9


@dataclass(frozen=True)
class PlannedOrder:
    sku_id: str
    supplier_id: str
    quantity: int
    placed_at: int
    promised_arrival: int


def plan_sku(sku: Sku, demand: list[int], offers: list[SupplierOffer],
             negotiation: NegotiationParams, initial_batches: list[tuple[int, int, int]],
             master_seed: int, disruption: DisruptionModel) -> list[PlannedOrder]:
    """Optimal order plan for one SKU against a known demand trace.

    initial_batches are (quantity, age, unit_cost_cents) tuples; returns
    orders sorted by placement period.
    """
    planner = _Planner(sku, demand, offers, negotiation, master_seed, disruption)
    start = tuple(sorted((tuple(b) for b in initial_batches if b[0] > 0),
                         key=lambda b: -b[1]))
    planner.best(0, start)
    return planner.extract_plan(start)


def plan_episode(skus: dict[str, Sku], demand_traces: dict[str, list[int]],
                 offers_by_sku: dict[str, list[SupplierOffer]],
                 negotiation: NegotiationParams,
                 initial_batches: dict[str, list[tuple[int, int, int]]],
                 master_seed: int, disruption: DisruptionModel) -> dict[int, list[PlannedOrder]]:
    """Plan every SKU independently, grouped by placement period."""
    by_period: dict[int, list[PlannedOrder]] = {}
    for sku_id in sorted(skus):
        plan = plan_sku(skus[sku_id], demand_traces[sku_id], offers_by_sku[sku_id],
                        negotiation, initial_batches.get(sku_id, []),
                        master_seed, disruption)
        for order in plan:
            by_period.setdefault(order.placed_at, []).append(order)
    for orders in by_period.values():
        orders.sort(key=lambda o: (o.sku_id, o.supplier_id))
    return by_period


class _Planner:
    def __init__(self, sku, demand, offers, negotiation, master_seed, disruption):
        self.sku = sku
        self.demand = list(demand)
        self.horizon = len(demand)
        self.offers = sorted(offers, key=lambda o: o.supplier_id)
        self.negotiation = negotiation
        self.master_seed = master_seed
        self.disruption = disruption
        self.h_cents = to_cents(sku.holding_cost)
        self.p_cents = to_cents(sku.stockout_penalty)
        self.shelf = sku.shelf_life if sku.shelf_life is not None else _BIG
        span = SPAN_CAP if sku.decay_fraction == 0 else DECAY_SPAN_CAP
        self.max_span = min(span, self.shelf + 1)
        self.memo: dict = {}
        self.choice: dict = {}
        self.price_cache: dict = {}
        self.fate_cache: dict = {}

    # -- ledger-identical single-period step ------------------------------

    def step(self, batches, t: int, arrival_qty: int, arrival_cost: int):
        """One period: receive, fulfill FIFO, expire, decay, hold. Returns
        (new batches, cost cents excluding stockout, shortfall units)."""
        work = [list(b) for b in batches]
        if arrival_qty > 0:
            work.append([arrival_qty, 0, arrival_cost])
        work.sort(key=lambda b: -b[1])  # oldest first
        remaining = self.demand[t]
        for b in work:
            take = min(b[0], remaining)
            b[0] -= take
            remaining -= take
            if remaining == 0:
                break
        cost = 0
        survivors = []
        for qty, age, unit_cost in work:
            if qty <= 0:
                continue
            age += 1
            if age > self.shelf:
                cost += qty * unit_cost
            else:
                survivors.append([qty, age, unit_cost])
        if self.sku.decay_fraction > 0:
            decay = int(math.floor(self.sku.decay_fraction * sum(b[0] for b in survivors)))
            for b in survivors:
                take = min(b[0], decay)
                b[0] -= take
                decay -= take
                cost += take * b[2]
                if decay == 0:
                    break
        survivors = [b for b in survivors if b[0] > 0]
        cost += self.h_cents * sum(b[0] for b in survivors)
        return tuple(tuple(b) for b in survivors), cost, remaining

    def baseline(self, t: int, batches):
        """No-arrival forward run over the span window from (t, batches).

        Returns (states, costs, shorts, cum_short) indexed by offset from t:
        states[i]/costs[i] describe the end of period t+i, shorts[i] the
        unmet demand there, cum_short[i] the running total.
        """
        states, costs, shorts, cum = [], [], [], []
        state = batches
        total = 0
        last = min(self.horizon - 1, t + self.max_span - 1)
        for period in range(t, last + 1):
            state, cost, short = self.step(state, period, 0, 0)
            states.append(state)
            costs.append(cost)
            shorts.append(short)
            total += short
            cum.append(total)
        return states, costs, shorts, cum

    # -- pricing and realized order fate -----------------------------------

    def unit_price_cents(self, offer: SupplierOffer, quantity: int) -> int:
        key = (offer.supplier_id, quantity)
        if key not in self.price_cache:
            self.price_cache[key] = to_cents(negotiate(offer, quantity, self.negotiation))
        return self.price_cache[key]

    def fate(self, offer: SupplierOffer, placed_at: int) -> tuple[int, float]:
        """(extra delay periods, fill fraction) realized for an order placed
        now; the draw is quantity-independent by construction."""
        if not self.disruption.active or offer.reliability >= 1.0:
            return 0, 1.0
        key = (offer.supplier_id, placed_at)
        if key not in self.fate_cache:
            probe = OrderDecision(self.sku.id, offer.supplier_id, 1, offer.unit_cost,
                                  placed_at, placed_at + offer.lead_time)
            stream = order_stream(self.master_seed, self.sku.id, offer.supplier_id, placed_at)
            arrival, delivered = perturb_order(probe, offer, self.disruption, stream)
            self.fate_cache[key] = (arrival - probe.promised_arrival,
                                    self.disruption.shortage_fill if delivered < 1 else 1.0)
        return self.fate_cache[key]

    # -- search -------------------------------------------------------------

    def best(self, t: int, batches) -> int:
        if t >= self.horizon:
            return 0
        key = (t, batches)
        if key in self.memo:
            return self.memo[key]
        states, costs, shorts, cum = self.baseline(t, batches)

        best_cost = costs[0] + self.p_cents * shorts[0] + self.best(t + 1, states[0])
        best_action = None

        for offer in self.offers:
            placed_at = t - offer.lead_time
            if placed_at < 0:
                continue
            shift, fill = self.fate(offer, placed_at)
            fast = (shift == 0 and fill == 1.0 and self.sku.decay_fraction == 0)
            for i in range(len(shorts)):
                if shorts[i] == 0 or cum[i] == 0:
                    continue  # same plan as a shorter span plus waiting
                if fast and max(cum[i], offer.moq) <= offer.capacity:
                    result = self._fast_order(offer, t, i, states, costs, cum)
                else:
                    result = self._slow_order(offer, t, i, batches, shift, fill)
                if result is not None and result[0] < best_cost:
                    best_cost, best_action = result
        self.memo[key] = best_cost
        self.choice[key] = best_action
        return best_cost

    def _fast_order(self, offer, t, i, states, costs, cum):
        """On-time in-full shipment for a durable SKU: existing stock drains
        identically with or without the arrival, so span costs are closed
        form over the baseline run."""
        quantity = max(cum[i], offer.moq)
        price = self.unit_price_cents(offer, quantity)
        cost = price * quantity + to_cents(offer.fixed_shipping)
        leftover = quantity
        for j in range(i + 1):
            cost += costs[j]
            leftover = quantity - cum[j]
            if j + 1 > self.shelf:  # fresh batch expires; only possible at j == i
                cost += leftover * price
                leftover = 0
            cost += self.h_cents * leftover
        end_state = states[i]
        if leftover > 0:
            end_state = tuple(sorted(end_state + ((leftover, i + 1, price),),
                                     key=lambda b: -b[1]))
        total = cost + self.best(t + i + 1, end_state)
        return total, (offer.supplier_id, quantity, t - offer.lead_time, t, t + i)

    def _slow_order(self, offer, t, i, batches, shift, fill):
        """Generic path: simulate the span with the realized shipment."""
        arrival = t + shift
        end = t + i
        span_end = min(self.horizon - 1, max(end, arrival))
        if arrival > span_end:
            return None
        delivered_need = self._min_delivered(batches, t, end, arrival)
        if delivered_need == 0:
            return None  # existing stock already covers everything after arrival
        quantity = None
        if delivered_need is not None:
            quantity = delivered_need if fill >= 1.0 else self._gross_for(delivered_need, fill)
            quantity = max(quantity, offer.moq)
        if quantity is None or quantity > offer.capacity:
            if offer.moq <= offer.capacity < _BIG and i == 0:
                quantity = offer.capacity  # partial cover under a tight cap
            else:
                return None
        delivered = int(math.floor(fill * quantity)) if fill < 1.0 else quantity
        if delivered <= 0:
            return None
        price = self.unit_price_cents(offer, quantity)
        purchase = price * delivered + to_cents(offer.fixed_shipping)
        state, span_cost = self._run_span(batches, t, span_end, arrival, delivered, price)
        total = purchase + span_cost + self.best(span_end + 1, state)
        return total, (offer.supplier_id, quantity, t - offer.lead_time, t, end)

    @staticmethod
    def _gross_for(delivered_need: int, fill: float) -> int:
        quantity = int(math.ceil(delivered_need / fill))
        while int(math.floor(fill * quantity)) < delivered_need:
            quantity += 1
        return quantity

    def _run_span(self, batches, start, end, arrival, delivered, price):
        state = batches
        cost = 0
        for period in range(start, end + 1):
            qty = delivered if period == arrival else 0
            state, c, short = self.step(state, period, qty, price)
            cost += c + self.p_cents * short
        return state, cost

    def _min_delivered(self, batches, start, end, arrival) -> int | None:
        """Smallest delivery at `arrival` leaving no shortfall in
        arrival..end; bisection is valid because post-decay stock is
        monotone in the delivery size."""
        hi_base = sum(self.demand[start:end + 1])
        if hi_base == 0:
            return 0
        keep = 1.0 - min(self.sku.decay_fraction, 0.95)
        hi = sum(int(math.ceil(self.demand[j] / max(keep ** (j - start), 1e-6)))
                 for j in range(start, end + 1)) + (end - start + 1)
        if self._span_short_after(batches, start, end, arrival, hi) > 0:
            return None
        lo = 0
        while lo < hi:
            mid = (lo + hi) // 2
            if self._span_short_after(batches, start, end, arrival, mid) > 0:
                lo = mid + 1
            else:
                hi = mid
        return lo

    def _span_short_after(self, batches, start, end, arrival, delivered) -> int:
        state = batches
        short_after = 0
        for period in range(start, end + 1):
            qty = delivered if period == arrival else 0
            state, _, short = self.step(state, period, qty, 0)
            if period >= arrival:
                short_after += short
        return short_after

    # -- plan extraction -----------------------------------------------------

    def extract_plan(self, start) -> list[PlannedOrder]:
        plan: list[PlannedOrder] = []
        t, state = 0, start
        while t < self.horizon:
            action = self.choice.get((t, state))
            if action is None:
                state, _, _ = self.step(state, t, 0, 0)
                t += 1
                continue
            supplier_id, quantity, placed_at, promised, end = action
            plan.append(PlannedOrder(self.sku.id, supplier_id, quantity,
                                     placed_at, promised))
            offer = next(o for o in self.offers if o.supplier_id == supplier_id)
            shift, fill = self.fate(offer, placed_at)
            arrival = promised + shift
            delivered = int(math.floor(fill * quantity)) if fill < 1.0 else quantity
            price = self.unit_price_cents(offer, quantity)
            span_end = min(self.horizon - 1, max(end, arrival))
            state, _ = self._run_span(state, promised, span_end, arrival, delivered, price)
            t = span_end + 1
        plan.sort(key=lambda o: (o.placed_at, o.supplier_id))
        return plan
