"""Registry of named lattices and reflective forms, the theorem verdict
engine and the end-to-end verification suite."""

from .catalog import (EXAMPLE_CLAIMS, EXAMPLES, UnknownNameError, hermitian_names,
                      make_named_hermitian, make_named_quadratic, make_quadratic)
from .forms import (SIG_2_6, SIG_2_10, DivisorKind, InadmissibleForm, ReflectiveFormEntry,
                    SignatureTag, form_lookup, uniruledness_check, weight_formula)
from .suite import SuiteItem, SuiteReport, paper_suite
from .verdict import HypothesisResult, TheoremVerdict, theorem_verdict

__all__ = [
    "EXAMPLE_CLAIMS", "EXAMPLES", "UnknownNameError", "hermitian_names",
    "make_named_hermitian", "make_named_quadratic", "make_quadratic",
    "SIG_2_6", "SIG_2_10", "DivisorKind", "InadmissibleForm", "ReflectiveFormEntry",
    "SignatureTag", "form_lookup", "uniruledness_check", "weight_formula",
    "SuiteItem", "SuiteReport", "paper_suite",
    "HypothesisResult", "TheoremVerdict", "theorem_verdict",
]
