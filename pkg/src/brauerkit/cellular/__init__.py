"""Cellular structure of the Brauer algebra: labels, Specht modules, cell modules."""

from .partitions import Partition, in_lambda0, lambda0_set, lambda_set, partitions_of
from .specht import (
    express_by_tabloids,
    polytabloid,
    specht_form,
    standard_tableaux,
    straighten,
)
from .cells import (
    CellModule,
    Dangle,
    MultiplicityReport,
    MultiplicityRow,
    cell_module,
    check_module_relations,
    check_rad_eq_ideal,
    dangles,
    gram_matrix,
    ideal_image,
    multiplicity_report,
    radical,
    simple_dim,
)

__all__ = [
    "Partition", "in_lambda0", "lambda0_set", "lambda_set", "partitions_of",
    "express_by_tabloids", "polytabloid", "specht_form", "standard_tableaux", "straighten",
    "CellModule", "Dangle", "MultiplicityReport", "MultiplicityRow", "cell_module",
    "check_module_relations", "check_rad_eq_ideal", "dangles", "gram_matrix", "ideal_image",
    "multiplicity_report", "radical", "simple_dim",
]
