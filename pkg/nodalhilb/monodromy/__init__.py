from nodalhilb.monodromy.graded import Operator, GradedSpace, GradedRep
from nodalhilb.monodromy.constructions import (
    zero_rep, trivial_rep, build_h1, exterior_power, tensor, tate_twist, direct_sum, direct_sum_all, relabel,
)
from nodalhilb.monodromy.invariants import invariant_basis, invariants
from nodalhilb.monodromy.cohomology import (
    cached_h1, cached_wedge, macdonald_rep, hilb_cohomology_rep, nested_cohomology_rep, nested_rep_dimension,
)
from nodalhilb.monodromy.closed_forms import (
    wedge_invariants, closed_form_I, closed_form_J, closed_form_extra, w_H_closed, w_I_closed,
)
from nodalhilb.monodromy.weights import (
    Method, ExtraMethod, degree_invariants, w_H, w_I, split_invariants_extra, extra_aggregate,
)
