"""Pluggable summation methods for divergent series, with an axiom harness.

A :class:`SummationMethod` maps a term stream ``a_0, a_1, ...`` (exact
rationals, consumed lazily up to a budget) to :class:`Summed`,
:class:`NotSummable` or :class:`BudgetExceeded`.  ``NotSummable`` is a
budget-relative verdict, never a mathematical claim.

Shipped methods:

* ``cesaro(k)`` -- k-fold iterated averaging of the partial sums, with a
  three-anchor Richardson extrapolation to squeeze an accurate value out
  of a finite budget;
* ``euler_transform()`` -- partial sums of the Euler binomial transform,
  computed exactly;
* ``abel_numeric_method()`` -- power-series evaluation at points
  approaching 1 from below, Richardson-extrapolated.

:func:`check_method_properties` probes the classical axioms (regular,
additive, multiplicative, left-translative) against a corpus of streams;
outcomes are corpus- and budget-relative evidence, not proofs.
:func:`chi_method` applies a method componentwise to the alternating
dimension streams of a series, yielding a characteristic in the sense of
that method.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import islice
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from .groups import Coords
from .groupring import Scalar
from .series import BadResidue, TruncatedSeries, tapered_eval


@dataclass(frozen=True)
class Summed:
    value: float


@dataclass(frozen=True)
class NotSummable:
    note: str = ""


@dataclass(frozen=True)
class BudgetExceeded:
    note: str = ""


SumResult = Summed | NotSummable | BudgetExceeded


@dataclass(frozen=True)
class SummationMethod:
    """A named summation procedure, deterministic for a fixed budget."""

    name: str
    proc: Callable[[Iterable[Scalar]], SumResult]

    def sum(self, terms: Iterable[Scalar]) -> SumResult:
        return self.proc(terms)

    def __call__(self, terms: Iterable[Scalar]) -> SumResult:
        return self.sum(terms)


def _richardson(deltas: Sequence[float], values: Sequence[float], levels: int) -> list[float]:
    # Standard Richardson table for an error expansion in powers of delta.
    ds = list(deltas)
    vs = list(values)
    for level in range(1, levels + 1):
        vs = [
            (vs[j] * ds[j - 1] ** level - vs[j - 1] * ds[j] ** level)
            / (ds[j - 1] ** level - ds[j] ** level)
            for j in range(1, len(vs))
        ]
        ds = ds[1:]
    return vs


def _growing(mags: Sequence[float], factor: float, floor: float, blowup: float) -> bool:
    if max(mags, default=0.0) > blowup:
        return True
    return (
        len(mags) >= 3
        and mags[-1] > factor * mags[-2]
        and mags[-2] > factor * mags[-3]
        and mags[-1] > floor
    )


def cesaro(k: int = 1, *, budget: int = 2**16, stab_tol: float = 1e-3) -> SummationMethod:
    """Iterated-averaging summation of order ``k >= 1``.

    Partial sums are averaged ``k`` times; the reported value is a
    three-anchor Richardson extrapolation of the final means (anchors at
    the full, half and quarter budget), which removes the ``1/n`` and
    ``log(n)/n`` tails of the mean sequence.  Verdicts: a non-decaying
    oscillation of the means is ``NotSummable``; anchors that fail to
    stabilize within ``stab_tol`` give ``BudgetExceeded``.
    """
    if k < 1:
        raise ValueError(f"averaging order must be >= 1, got {k}")

    def proc(terms: Iterable[Scalar]) -> SumResult:
        vals = [float(v) for v in islice(iter(terms), budget)]
        n = len(vals)
        if n < 16:
            if n < budget:  # the stream ended: a finite series sums plainly
                return Summed(sum(vals))
            return BudgetExceeded(f"budget {budget} gives only {n} terms; need at least 16")
        seq = vals
        means = []
        acc = 0.0
        for i, v in enumerate(seq):  # partial sums
            acc += v
            means.append(acc)
        for _ in range(k):  # k averaging passes
            acc = 0.0
            averaged = []
            for i, v in enumerate(means):
                acc += v
                averaged.append(acc / (i + 1))
            means = averaged
        scale = max(1.0, abs(means[-1]))
        w_prev = means[n // 2 : 3 * n // 4]
        w_last = means[3 * n // 4 :]
        osc_prev = max(w_prev) - min(w_prev)
        osc_last = max(w_last) - min(w_last)
        if osc_last > 1e-9 * scale and osc_last >= 0.9 * osc_prev:
            return NotSummable(
                f"means oscillate without decay (window spread {osc_last:.3g})"
            )
        m1, m2, m4 = means[n - 1], means[n // 2 - 1], means[n // 4 - 1]
        r1 = 2 * m1 - m2
        r0 = 2 * m2 - m4
        if abs(r1 - r0) > stab_tol * max(1.0, abs(r1)):
            return BudgetExceeded(
                f"extrapolated means not stable within {stab_tol:g} at budget {budget}"
            )
        return Summed(2 * r1 - r0)

    return SummationMethod(f"cesaro:{k}", proc)


def euler_transform(*, budget: int = 1024, tol: float = 1e-12) -> SummationMethod:
    """Summation by the Euler binomial transform, computed exactly.

    The transformed terms ``2^-(n+1) * sum_k C(n,k) a_k`` are accumulated
    until three consecutive ones fall below ``tol``.  The default budget
    is smaller than for the other methods because each transformed term
    costs a full binomial row.
    """

    def proc(terms: Iterable[Scalar]) -> SumResult:
        it = iter(terms)
        a: list[Fraction] = []
        row: list[int] = []
        total = Fraction(0)
        small = 0
        exhausted = False
        for n in range(budget):
            if not exhausted:
                try:
                    a.append(Fraction(next(it)))
                except StopIteration:
                    exhausted = True
            if exhausted:
                a.append(Fraction(0))
            if row:
                row = [1] + [row[i] + row[i + 1] for i in range(len(row) - 1)] + [1]
            else:
                row = [1]
            b = Fraction(sum(c * x for c, x in zip(row, a)), 2 ** (n + 1))
            total += b
            mag = abs(float(b))
            if mag > 1e12:
                return NotSummable(f"transformed terms blow up at index {n}")
            if mag < tol:
                small += 1
                if small >= 3:
                    return Summed(float(total))
            else:
                small = 0
        return BudgetExceeded(f"transform did not settle within {budget} rows")

    return SummationMethod("euler", proc)


def abel_deltas(k_min: int = 4, k_max: int = 10) -> tuple[float, ...]:
    return tuple(2.0**-k for k in range(k_min, k_max + 1))


def abel_numeric_method(
    deltas: Sequence[float] | None = None,
    *,
    budget: int = 2**16,
    tol: float = 1e-6,
    blowup: float = 1e6,
    window: int = 2,
) -> SummationMethod:
    """Abel summation: evaluate ``sum a_n x^n`` at ``x = 1 - delta``.

    For each usable offset the series is truncated at ``24/delta`` terms
    (enough that polynomially growing coefficients are damped out) and
    evaluated with a tapered Horner sum; two Richardson levels then
    extrapolate the evaluations to ``delta = 0``.  ``window`` is the
    number of trailing partial sums averaged by the taper: streams whose
    terms are eventually periodic with period ``p`` need ``window`` a
    multiple of ``p`` for a clean evaluation (the default handles the
    alternating case).
    """
    schedule = tuple(sorted(deltas if deltas is not None else abel_deltas(), reverse=True))

    def proc(terms: Iterable[Scalar]) -> SumResult:
        want = min(budget, math.ceil(24.0 / min(schedule)) + 1)
        a = [float(v) for v in islice(iter(terms), want)]
        if len(a) < want:  # the stream ended: a finite series sums plainly
            return Summed(sum(a))
        usable = [d for d in schedule if 24.0 / d <= len(a) - 1]
        if len(usable) < 4:
            return BudgetExceeded(
                f"{len(a)} terms support only {len(usable)} evaluation points; need >= 4"
            )
        values = []
        for d in usable:
            n_terms = math.ceil(24.0 / d) + 1
            values.append(tapered_eval(a[:n_terms], 1.0 - d, window))
        mags = [abs(v) for v in values]
        if _growing(mags, 1.6, max(1.0, 100.0 * tol), blowup):
            return NotSummable("evaluations grow as the offset shrinks")
        extr = _richardson(usable, values, levels=2)
        if abs(extr[-1] - extr[-2]) > tol * max(1.0, abs(extr[-1])):
            return BudgetExceeded(f"evaluations not stable within {tol:g}")
        return Summed(extr[-1])

    return SummationMethod("abel", proc)


# ---------------------------------------------------------------------------
# componentwise characteristics in the sense of a method
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MethodCharacteristic:
    """Componentwise method-sense characteristic of a series."""

    method: str
    components: Mapping[Coords, SumResult]

    @property
    def exists(self) -> bool:
        return all(isinstance(r, Summed) for r in self.components.values())

    @property
    def budget_exceeded(self) -> bool:
        return any(isinstance(r, BudgetExceeded) for r in self.components.values())

    def values(self) -> dict[Coords, float]:
        return {
            k: r.value for k, r in self.components.items() if isinstance(r, Summed)
        }


def chi_method(series: TruncatedSeries, method: SummationMethod) -> MethodCharacteristic:
    """Apply a summation method to each alternating component stream.

    The stream for component ``g`` is ``(-1)^n * coeff_n[g]``; the
    characteristic exists in the sense of the method only if every
    component stream is summable.
    """
    keys = sorted({k for c in series.coeffs for k in c.support})
    results: dict[Coords, SumResult] = {}
    for key in keys:
        stream = (
            (c.coeff(key) if n % 2 == 0 else -c.coeff(key))
            for n, c in enumerate(series.coeffs)
        )
        results[key] = method.sum(stream)
    return MethodCharacteristic(method.name, results)


def summab_terms(d: int, r: int, n: int) -> Iterator[int]:
    """Binomial term stream ``C(d + r*i + n - 1, r*i + n)`` for ``i = 0, 1, ...``.

    These are the residue-class slices of the symmetric-power dimension
    sequence of a ``d``-dimensional component in a degree of order ``r``;
    a method summing them (for every residue) sums the odd-degree factors
    that Abel summation cannot handle.
    """
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")
    if r < 2 or r % 2:
        raise BadResidue(f"order must be even and >= 2, got {r}")
    if not 0 <= n < r:
        raise BadResidue(f"residue must satisfy 0 <= n < {r}, got {n}")
    i = 0
    while True:
        yield math.comb(d + r * i + n - 1, r * i + n)
        i += 1


# ---------------------------------------------------------------------------
# axiom harness
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TermStream:
    """A named stream: ``terms()`` returns a fresh iterator each call."""

    name: str
    terms: Callable[[], Iterator[Scalar]]
    limit: float | None = None
    convergent: bool = False


@dataclass(frozen=True)
class AxiomOutcome:
    status: str  # "passed" | "failed" | "skipped"
    checks: int
    witness: str | None = None


@dataclass(frozen=True)
class MethodReport:
    method: str
    regular: AxiomOutcome
    additive: AxiomOutcome
    multiplicative: AxiomOutcome
    left_translative: AxiomOutcome

    @property
    def ok(self) -> bool:
        return all(
            o.status != "failed"
            for o in (self.regular, self.additive, self.multiplicative, self.left_translative)
        )


def _combined(sa: TermStream, sb: TermStream, lam: Scalar, mu: Scalar) -> Iterator[Scalar]:
    ita, itb = sa.terms(), sb.terms()
    while True:
        x = next(ita, None)
        y = next(itb, None)
        if x is None and y is None:
            return
        yield lam * (x or 0) + mu * (y or 0)


def _cauchy_product(sa: TermStream, sb: TermStream, cap: int) -> Iterator[Scalar]:
    ita, itb = sa.terms(), sb.terms()
    a: list[Scalar] = []
    b: list[Scalar] = []
    for n in range(cap):
        a.append(next(ita, 0))
        b.append(next(itb, 0))
        yield sum(a[i] * b[n - i] for i in range(n + 1))


def _shifted(s: TermStream) -> Iterator[Scalar]:
    it = s.terms()
    next(it, None)
    return it


def check_method_properties(
    method: SummationMethod,
    corpus: Sequence[TermStream],
    *,
    tol: float = 1e-6,
    coefficient_pairs: Sequence[tuple[Scalar, Scalar]] = ((2, 3), (1, -1)),
    product_cap: int = 4096,
) -> MethodReport:
    """Probe the summation axioms on a corpus of streams.

    Every verdict is relative to the corpus and the method's budget:
    ``passed`` means no counterexample was found, ``failed`` carries a
    witness.  Cauchy products are materialized up to ``product_cap``
    terms, which bounds the cost of the multiplicativity probe.
    """
    sums = {s.name: method.sum(s.terms()) for s in corpus}
    summable = [s for s in corpus if isinstance(sums[s.name], Summed)]

    def close(x: float, y: float) -> bool:
        return abs(x - y) <= tol * max(1.0, abs(x), abs(y))

    # regularity: convergent streams must sum to their limits
    checks, witness = 0, None
    for s in corpus:
        if not s.convergent:
            continue
        checks += 1
        r = sums[s.name]
        if not isinstance(r, Summed) or not close(r.value, s.limit):
            got = f"{r.value:.3g}" if isinstance(r, Summed) else type(r).__name__
            witness = f"{s.name}: expected {s.limit}, got {got}"
            break
    regular = AxiomOutcome(
        "skipped" if checks == 0 else ("failed" if witness else "passed"), checks, witness
    )

    # additivity on summable pairs
    checks, witness = 0, None
    for i, sa in enumerate(summable):
        if witness:
            break
        for sb in summable[i:]:
            if witness:
                break
            for lam, mu in coefficient_pairs:
                checks += 1
                expected = (
                    float(lam) * sums[sa.name].value + float(mu) * sums[sb.name].value
                )
                r = method.sum(_combined(sa, sb, lam, mu))
                if not isinstance(r, Summed) or not close(r.value, expected):
                    witness = f"{lam}*{sa.name} + {mu}*{sb.name}"
                    break
    additive = AxiomOutcome(
        "skipped" if checks == 0 else ("failed" if witness else "passed"), checks, witness
    )

    # multiplicativity via Cauchy products of summable pairs
    checks, witness = 0, None
    for i, sa in enumerate(summable):
        if witness:
            break
        for sb in summable[i:]:
            checks += 1
            expected = sums[sa.name].value * sums[sb.name].value
            r = method.sum(_cauchy_product(sa, sb, product_cap))
            if not isinstance(r, Summed) or not close(r.value, expected):
                witness = f"{sa.name} * {sb.name}"
                break
    multiplicative = AxiomOutcome(
        "skipped" if checks == 0 else ("failed" if witness else "passed"), checks, witness
    )

    # left-translativity: dropping a_0 subtracts a_0
    checks, witness = 0, None
    for s in summable:
        checks += 1
        a0 = float(next(s.terms(), 0))
        r = method.sum(_shifted(s))
        if not isinstance(r, Summed) or not close(r.value, sums[s.name].value - a0):
            witness = s.name
            break
    left_translative = AxiomOutcome(
        "skipped" if checks == 0 else ("failed" if witness else "passed"), checks, witness
    )

    return MethodReport(method.name, regular, additive, multiplicative, left_translative)


def compare_methods(
    a: SummationMethod,
    b: SummationMethod,
    corpus: Sequence[TermStream],
    *,
    tol: float = 1e-4,
) -> list[str]:
    """Streams both methods sum but to different values (incompatibility witnesses)."""
    out = []
    for s in corpus:
        ra, rb = a.sum(s.terms()), b.sum(s.terms())
        if isinstance(ra, Summed) and isinstance(rb, Summed):
            if abs(ra.value - rb.value) > tol * max(1.0, abs(ra.value), abs(rb.value)):
                out.append(f"{s.name}: {a.name} -> {ra.value:.6g}, {b.name} -> {rb.value:.6g}")
    return out
