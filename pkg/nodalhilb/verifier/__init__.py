from nodalhilb.verifier.identities import Identity, identity_check, get_check, registered_identities
from nodalhilb.verifier.checks import (
    CellStatus, CellResult, verify_hilb_support, verify_nested_support, verify_lemma_A, verify_lemma_B, run_cell,
)
from nodalhilb.verifier.report import VerificationReport
from nodalhilb.verifier.verifier import Verifier, verify_grid, largest_matrix_dimension
