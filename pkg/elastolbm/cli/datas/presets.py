"""
Named experiment presets for the CLI: runs, long-horizon runs and convergence studies.
"""

# Refinement levels under acoustic scaling, c = 2.5
DESK_DISCRETIZATIONS = "1/40,1/100;1/80,1/200;1/160,1/400"
FULL_DISCRETIZATIONS = "1/80,1/200;1/120,1/300;1/160,1/400;1/240,1/600;1/320,1/800"

# (cK2, cmu2)
DESK_MATERIALS = "1.5,0.0;1.1,0.4;0.75,0.75"
FULL_MATERIALS = "1.5,0.0;1.4,0.1;1.1,0.4;0.75,0.75"

# Single runs
run_presets: dict[str, dict[str, str]] = {
    "wave52_periodic": {
        "case": "wave52",
        "mode": "periodic",
        "cK2": "1.1",
        "cmu2": "0.4",
        "dx": "1/80",
        "dt": "1/200",
        "t_final": "1",
    },
    "wave52_dirichlet": {
        "case": "wave52",
        "mode": "dirichlet",
        "cK2": "1.1",
        "cmu2": "0.4",
        "dx": "1/80",
        "dt": "1/200",
        "t_final": "1",
    },
    "norm_conservation": {
        "case": "stability_ic",
        "mode": "dirichlet",
        "cK2": "1.1",
        "cmu2": "0.4",
        "dx": "1/160",
        "dt": "1/400",
        "t_final": "25",
        "norm_stride": "10",
    },
    "norm_conservation_short": {
        "case": "stability_ic",
        "mode": "dirichlet",
        "cK2": "1.1",
        "cmu2": "0.4",
        "dx": "1/160",
        "dt": "1/400",
        "t_final": "10",
        "norm_stride": "10",
    },
}

# Long-horizon runs for the stability command
stability_presets: dict[str, dict[str, str]] = {
    "long_stable": {
        "case": "wave52",
        "mode": "dirichlet",
        "cK2": "1.1",
        "cmu2": "0.4",
        "dx": "1/160",
        "dt": "1/400",
        "t_final": "250",
        "norm_stride": "100",
        "error_stride": "100",
    },
    "long_unstable": {
        "case": "wave52",
        "mode": "dirichlet",
        "cK2": "1.2",
        "cmu2": "0.4",
        "dx": "1/160",
        "dt": "1/400",
        "t_final": "250",
        "norm_stride": "1",
        "error_stride": "100",
        "cfl_override": "true",
    },
    "long_stable_full": {
        "case": "wave52",
        "mode": "dirichlet",
        "cK2": "1.1",
        "cmu2": "0.4",
        "dx": "1/160",
        "dt": "1/400",
        "t_final": "2500",
        "norm_stride": "1000",
        "error_stride": "1000",
    },
    "bounded_norm_coarse": {
        "case": "wave52",
        "mode": "dirichlet",
        "cK2": "1.4",
        "cmu2": "0.1",
        "dx": "1/160",
        "dt": "1/400",
        "t_final": "1",
        "norm_stride": "4",
    },
    "bounded_norm_fine": {
        "case": "wave52",
        "mode": "dirichlet",
        "cK2": "1.4",
        "cmu2": "0.1",
        "dx": "1/320",
        "dt": "1/800",
        "t_final": "1",
        "norm_stride": "8",
    },
}
stability_presets.update(run_presets)

# Convergence studies; --full swaps in the full level and material lists
converge_presets: dict[str, dict[str, str]] = {
    "converge_periodic": {
        "case": "wave52",
        "mode": "periodic",
        "materials": DESK_MATERIALS,
        "discretizations": DESK_DISCRETIZATIONS,
        "t_final": "1",
    },
    "converge_dirichlet": {
        "case": "wave52",
        "mode": "dirichlet",
        "materials": DESK_MATERIALS,
        "discretizations": DESK_DISCRETIZATIONS,
        "t_final": "1",
    },
}
full_study_overrides: dict[str, str] = {
    "materials": FULL_MATERIALS,
    "discretizations": FULL_DISCRETIZATIONS,
}
