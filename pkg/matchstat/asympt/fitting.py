
"""
    Decay Fits
    ~~~~~~~~~~

    Least-squares slope of log|residual| against log t.
"""

from typing import List, Optional, Tuple

import numpy as np

from ..common import ValidationError, DegenerateFitError


MIN_POINTS = 4


class ResidualSeries:

    def __init__(self, name: str, points: List[Tuple[float, float]] = None):
        super().__init__()
        self.name = name
        self.points: List[Tuple[float, float]] = [] if points is None else list(points)
        self.__fit: Optional[Tuple[float, float]] = None

    def append(self, t: float, residual: float):
        self.points.append((float(t), float(residual)))
        self.__fit = None

    @property
    def ts(self) -> List[float]:
        return [t for t, _ in self.points]

    @property
    def residuals(self) -> List[float]:
        return [r for _, r in self.points]

    def fit(self) -> Tuple[float, float]:
        """ (slope, intercept) """
        if self.__fit is None:
            self.__fit = fit_line(self)
        return self.__fit

    @property
    def slope(self) -> float:
        return self.fit()[0]

    @property
    def intercept(self) -> float:
        return self.fit()[1]

    def to_dict(self) -> dict:
        info = {
            'name': self.name,
            'points': [{'t': t, 'residual': r} for t, r in self.points],
        }
        if len(self.points) >= MIN_POINTS and all(r != 0 for _, r in self.points):
            slope, intercept = self.fit()
            info['fitted_slope'] = slope
            info['intercept'] = intercept
        return info

    def __len__(self) -> int:
        return len(self.points)

    def __repr__(self) -> str:
        clazz = self.__class__.__name__
        return '<%s name="%s" points=%d />' % (clazz, self.name, len(self.points))


def fit_line(series: ResidualSeries) -> Tuple[float, float]:
    if len(series) < MIN_POINTS:
        raise ValidationError('%s: a decay fit needs >= %d points, got %d' % (series.name, MIN_POINTS, len(series)))
    ts = np.array(series.ts, dtype=float)
    rs = np.abs(np.array(series.residuals, dtype=float))
    if np.any(rs == 0):
        raise DegenerateFitError('%s: zero residual in decay fit' % series.name)
    if np.any(ts <= 0):
        raise ValidationError('%s: t must be > 0 in decay fit' % series.name)
    slope, intercept = np.polyfit(np.log(ts), np.log(rs), 1)
    if not np.isfinite(slope):
        raise DegenerateFitError('%s: slope is not finite' % series.name)
    return float(slope), float(intercept)


def fit_decay(series: ResidualSeries) -> float:
    return series.slope
