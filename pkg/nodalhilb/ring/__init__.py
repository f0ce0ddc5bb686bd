from nodalhilb.ring.weight_poly import (
    WeightPoly, poly_add, poly_sub, poly_neg, poly_mul, poly_scale, poly_shift, poly_sum,
    eval_at_one, geometric_sum,
)
from nodalhilb.ring.qseries import (
    QSeries, series_add, series_sub, series_scale, series_mul, series_inverse, series_pow, coefficient,
    series_from_coeffs,
)
from nodalhilb.ring.binomial import binom
