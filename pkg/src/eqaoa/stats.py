"""Summary statistics, two-sample t-tests and histogram binning.

The reference datasets in :mod:`eqaoa._fixtures` are exposed as
:class:`SampleSet` objects through :func:`fixture`.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

import numpy as np
from scipy.special import betainc

from . import _fixtures
from .mixers import MixerKind

__all__ = [
    "SampleSet",
    "Summary",
    "TTestResult",
    "HistogramResult",
    "summarize",
    "t_test",
    "histogram",
    "fixture",
    "fixture_keys",
    "summaries_to_csv",
    "t_tests_to_json",
    "DEFAULT_T_VARIANT",
]

# the equal-variance test reproduces the reference p-values for the stored
# campaigns; Welch is kept for comparison
DEFAULT_T_VARIANT = "pooled"


@dataclass(frozen=True, eq=False)
class SampleSet:
    label: str
    values: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.values, dtype=float).reshape(-1)
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    def __len__(self):
        return self.values.size

    def __eq__(self, other):
        if not isinstance(other, SampleSet):
            return NotImplemented
        return self.label == other.label and np.array_equal(self.values, other.values)


def _require(s: SampleSet, minimum: int = 1):
    if len(s) < minimum:
        raise ValueError(f"sample set {s.label!r} needs at least {minimum} value(s), has {len(s)}")


@dataclass(frozen=True)
class Summary:
    label: str
    mean: float
    median: float
    min: float
    count: int
    _values: tuple = field(default=(), repr=False)

    def fraction_below(self, threshold: float) -> tuple[int, int]:
        """``(k, count)`` with ``k`` the number of values strictly below ``threshold``."""
        return sum(v < threshold for v in self._values), self.count

    def to_dict(self, threshold: float = 1.0) -> dict:
        k, n = self.fraction_below(threshold)
        return {
            "label": self.label,
            "mean": self.mean,
            "median": self.median,
            "min": self.min,
            "count": self.count,
            "below_threshold": k,
            "threshold": threshold,
        }


def summarize(s: SampleSet) -> Summary:
    _require(s)
    v = s.values
    return Summary(
        label=s.label,
        mean=float(np.mean(v)),
        median=float(np.median(v)),
        min=float(np.min(v)),
        count=int(v.size),
        _values=tuple(float(x) for x in v),
    )


@dataclass(frozen=True)
class TTestResult:
    variant: str
    t: float
    df: float
    p_two_sided: float

    def to_dict(self) -> dict:
        return {"variant": self.variant, "t": self.t, "df": self.df, "p_two_sided": self.p_two_sided}


def _two_sided_p(t: float, df: float) -> float:
    # P(|T| > |t|) = I_{df/(df+t^2)}(df/2, 1/2)
    if np.isinf(t):
        return 0.0
    return float(betainc(0.5 * df, 0.5, df / (df + t * t)))


def t_test(a: SampleSet, b: SampleSet, variant: str = DEFAULT_T_VARIANT) -> TTestResult:
    """Two-sample t statistic for ``mean(a) - mean(b)`` and its two-sided p-value."""
    if variant not in ("pooled", "welch"):
        raise ValueError(f"variant must be 'pooled' or 'welch', got {variant!r}")
    _require(a, 2)
    _require(b, 2)
    na, nb = len(a), len(b)
    ma, mb = a.values.mean(), b.values.mean()
    va, vb = a.values.var(ddof=1), b.values.var(ddof=1)
    diff = ma - mb
    if variant == "pooled":
        df = float(na + nb - 2)
        sp2 = ((na - 1) * va + (nb - 1) * vb) / df
        se2 = sp2 * (1.0 / na + 1.0 / nb)
    else:
        qa, qb = va / na, vb / nb
        se2 = qa + qb
        if se2 > 0:
            # Welch-Satterthwaite, written with ratios so tiny variances do not underflow
            ra, rb = qa / se2, qb / se2
            df = 1.0 / (ra * ra / (na - 1) + rb * rb / (nb - 1))
        else:
            df = float(na + nb - 2)
    if se2 == 0:
        if diff == 0:
            return TTestResult(variant, 0.0, df, 1.0)
        t = float(np.copysign(np.inf, diff))
    else:
        t = float(diff / np.sqrt(se2))
    return TTestResult(variant, t, float(df), _two_sided_p(t, df))


@dataclass(frozen=True)
class HistogramResult:
    edges: np.ndarray
    counts: np.ndarray
    dropped: int


def histogram(s: SampleSet, lo: float, hi: float, bins: int) -> HistogramResult:
    """Counts over ``bins`` equal left-closed bins of ``[lo, hi)``.

    Values outside the range (``hi`` itself included) are not clipped into
    the end bins; they are dropped and counted in ``dropped``.
    """
    if bins < 1:
        raise ValueError("bins must be >= 1")
    if not hi > lo:
        raise ValueError("need max > min")
    edges = np.linspace(lo, hi, bins + 1)
    v = s.values
    inside = (v >= lo) & (v < hi)
    idx = np.floor((v[inside] - lo) / (hi - lo) * bins).astype(int)
    idx = np.minimum(idx, bins - 1)
    counts = np.bincount(idx, minlength=bins)
    return HistogramResult(edges, counts, int(v.size - inside.sum()))


# -- reference data -------------------------------------------------------

def fixture_keys() -> list[tuple[str, str]]:
    return list(_fixtures._NUMERATORS)


def fixture(graph: str, mixer) -> SampleSet:
    """Reference per-trial energies for ``(graph, mixer)``."""
    kind = MixerKind.parse(mixer).value
    try:
        nums = _fixtures._NUMERATORS[(graph, kind)]
    except KeyError:
        raise KeyError(f"no reference data for graph {graph!r} with mixer {kind!r}") from None
    return SampleSet(f"{graph}/{kind}", np.asarray(nums, dtype=float) / _fixtures.SHOT_DENOMINATOR)


# -- export ---------------------------------------------------------------

_CSV_FIELDS = ["label", "mean", "median", "min", "count", "below_threshold", "threshold"]


def summaries_to_csv(summaries, threshold: float = 1.0) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=_CSV_FIELDS, lineterminator="\n")
    w.writeheader()
    for s in summaries:
        row = s.to_dict(threshold)
        row.update({k: repr(row[k]) for k in ("mean", "median", "min")})
        w.writerow(row)
    return buf.getvalue()


def t_tests_to_json(results, labels: tuple[str, str] | None = None) -> str:
    doc = {"tests": [r.to_dict() for r in results]}
    if labels is not None:
        doc["a"], doc["b"] = labels
    return json.dumps(doc, indent=2)
