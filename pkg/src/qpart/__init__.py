"""2-colored Rogers-Ramanujan partitions, their overpartition bijection, and
exact truncated q-series checks of the associated generating-function
identities."""
from qpart._kernels import BACKEND
from qpart.bijection import colored_to_over, over_to_colored, runs
from qpart.partitions import (
    Color,
    ColoredPartition,
    Overpartition,
    count_2crr,
    count_2crr_no_red1,
    count_C,
    count_D,
    enumerate_2crr,
    is_valid_2crr,
    is_valid_D,
)
from qpart.qseries import Monomial, QSeries, XQSeries

__version__ = "0.1.0"
