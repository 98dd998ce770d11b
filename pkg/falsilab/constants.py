"""
Constants used across the package.
"""

# Family kind names accepted by descriptors and class files
FAMILY_KINDS = {
    "threshold",
    "interval",
    "evenzero",
    "cylinder",
    "partition",
    "allheads",
    "full",
    "empty",
    "coordhalf",
}

# Materializations above this many traces are logged
LARGE_CLASS_THRESHOLD = 1 << 16

# CSV trace export
CSV_COLUMNS = ["n", "mu", "surprise", "co_surprise", "crucial"]
DECIMAL_PLACES = 6

# CLI exit codes
EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_PARSE_ERROR = 2

# Error messages
ERROR_MESSAGES = {
    "ground_size": "Ground size must be between 1 and {}, got {}",
    "ground_labels": "Ground labels must be {} pairwise distinct strings",
    "trace_width": "Trace {} does not fit a ground of size {}",
    "duplicate_traces": "Explicit traces must be pairwise distinct",
    "subset_range": "Subset element {} is outside the ground set of size {}",
    "subset_duplicates": "Subset elements must be pairwise distinct, got {}",
    "assignment_range": "Assignment index {} is outside the ground set of size {}",
    "assignment_duplicates": "Assignment indices must be pairwise distinct, got {}",
    "assignment_bit": "Assignment value for index {} must be 0 or 1, got {}",
    "prefix_range": "Sample element {} is outside the ground set of size {}",
    "prefix_injective": "Sample must be injective, element {} repeats",
    "prefix_length": "Prefix length n={} must be between 0 and the sample length {}",
    "pattern_width": "Pattern '{}' must have width {}",
    "pattern_alphabet": "Pattern '{}' may only contain 0 and 1",
    "range": "{} must be between {} and {}, got {}",
    "epsilon": "epsilon must satisfy 0 < epsilon < 1, got {}",
    "probability": "{} must be a probability in [0, 1], got {}",
    "ground_mismatch": "Classes live on different grounds ({} vs {})",
    "unknown_family": "Unknown family kind '{}'. Must be one of: {}",
    "family_param": "Family '{}' {}",
    "cap_exceeded": "Materializing a ground of size {} exceeds the cap of {}",
    "profile_budget": "Profile of depth {} enumerates {} assignments, above the budget of {}",
    "empty_class": "VC dimension of the empty class is undefined",
    "not_shatterable": "No set of size {} is shattered (VC dimension is {})",
    "no_crucial_experiment": "The class shatters every subset of the free coordinates {}",
    "zero_condition": "Conditioning class has co-surprise 0 on this window",
    "empty_parameter_set": "Parameter set has no admissible point",
    "grid_step": "Grid step must be positive, got {}",
    "interval_bounds": "Interval bounds must satisfy 0 <= lo <= hi <= 1, got [{}, {}]",
    "tails_n": "Number of flips must be at least 1, got {}",
}
