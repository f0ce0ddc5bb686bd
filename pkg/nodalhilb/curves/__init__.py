from nodalhilb.curves.curve_spec import CurveSpec
from nodalhilb.curves.classes import (
    node_punctual_hilb_class, node_punctual_nested_class, projective_line_series, regular_part_series,
    node_local_series, hilb_series, hilb_series_product_formula, hilb_class, hilb_class_closed_form,
    curve_class, regular_locus_class, tilde_hilb_class, nested_class, nested_class_direct,
    hilb_euler_characteristic, nested_euler_characteristic,
)
