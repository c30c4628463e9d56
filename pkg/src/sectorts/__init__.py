"""Decomposition, association and regression analysis of monthly index series."""

from .association import (
    CorrelationTest,
    CrossCorrelogram,
    ccf,
    cor_test,
    pearson_r,
    student_t_sf,
)
from .decomposition import (
    Decomposition,
    SeasonalFigures,
    centered_ma_trend,
    decompose,
    seasonal_figures,
)
from .regression import (
    ForecastRow,
    ForecastTable,
    LinearModelSummary,
    error_table,
    fit_ols,
    forecast,
    reciprocal_fit_check,
)
from .series import (
    AlignedPair,
    DailyRecord,
    MonthlySeries,
    MonthStamp,
    Window,
    aggregate_daily_to_monthly,
    align,
    parse_daily_csv,
    parse_monthly_file,
    window,
)

__version__ = "0.1.0"
