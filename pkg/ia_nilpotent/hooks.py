app_name = "ia_nilpotent"
app_title = "IA Nilpotent"
app_publisher = "ia_nilpotent Contributors"
app_description = "IA-automorphisms, class-preserving automorphisms and Schur-type bounds for finite nilpotent groups"
app_license = "MIT"
app_version = "0.1.0"

# Record Controllers
# ------------------
# doctype folder -> controller class

doctype_controllers = {
    "group_analysis": "ia_nilpotent.groups.doctype.group_analysis.group_analysis.GroupAnalysis",
    "aut_set_export": "ia_nilpotent.groups.doctype.aut_set_export.aut_set_export.AutSetExport",
    "theorem_record": "ia_nilpotent.groups.doctype.theorem_record.theorem_record.TheoremRecord",
    "suite_report": "ia_nilpotent.groups.doctype.suite_report.suite_report.SuiteReport",
}

# Theorem Checks
# --------------
# selector -> adapter taking a FiniteGroup and returning a CheckOutcome.
# `verify --all` runs them in this order.

theorem_checks = {
    "exponents": "ia_nilpotent.groups.theorems.run_exponents",
    "counting": "ia_nilpotent.groups.theorems.run_counting",
    "oracle": "ia_nilpotent.groups.theorems.run_oracle",
    "containments": "ia_nilpotent.groups.theorems.run_containments",
    "ia-inner": "ia_nilpotent.groups.theorems.run_ia_inner",
    "ia-star-inner": "ia_nilpotent.groups.theorems.run_ia_star_inner",
    "symbolic": "ia_nilpotent.groups.theorems.run_symbolic",
    "cyclic-derived": "ia_nilpotent.groups.theorems.run_cyclic_derived",
    "two-generator": "ia_nilpotent.groups.theorems.run_two_generator",
    "p-group": "ia_nilpotent.groups.theorems.run_p_group",
    "schur": "ia_nilpotent.groups.theorems.run_schur",
    "central-quotient-power": "ia_nilpotent.groups.theorems.run_central_quotient_power",
    "coclass-two": "ia_nilpotent.groups.theorems.run_coclass_two",
    "maximal-class": "ia_nilpotent.groups.theorems.run_maximal_class",
    "example32": "ia_nilpotent.groups.theorems.run_example32",
}

# Corpus
# ------

default_corpus = "ia_nilpotent.groups.corpus.default_corpus"
