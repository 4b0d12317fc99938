"""
Constants Module - Centralized constants for tfsqueeze

Default analysis parameters, file-format identifiers and the error message
templates shared by workflows, adapters and the command line.
"""


class Defaults:
    """Built-in analysis defaults (overridable via environment or flags)."""

    OMEGA0 = 6.0
    SIGMA = 1.0
    UPSILON = 1e-3
    UPSILON_MODE = "relative"
    RENYI_ALPHA = 3.0
    K_MIN = 1
    ITERATIONS = 1
    ITER_MODE = "linear"

    # |g| below this level outside [-d, d]
    SUPPORT_LEVEL = 1e-8
    # window tail used for the reliable-row test in frequency
    SPECTRAL_TOL = 1e-6

    TFES_PEAK_FRACTION = 0.5
    TFES_FUNDAMENTAL_FRACTION = 0.5
    MIN_SEPARATION_S = 0.005
    INTERVAL_OUTLIER_TOL = 0.25

    RENDER_SCALE = "log"
    RENDER_CMAP = "viridis"
    LOG_CLAMP = 1e-8

    ROW_BLOCK = 32
    ORACLE_MAX_LEN = 256
    MIN_SIGNAL_LEN = 8

    SWEEP_TRIALS = 5
    SWEEP_SEED = 7
    SWEEP_ITERATIONS = 10


class FileTypes:
    """Supported file types and container identifiers."""

    CSV = '.csv'
    TFR = '.tfr'
    PNG = '.png'
    SIDECAR_SUFFIX = '.json'

    TFR_MAGIC = b'TFR1'
    TFR_KIND_COMPLEX = 0
    TFR_KIND_REAL = 1

    SIGNAL_HEADER_PREFIX = '#'


class EnvKeys:
    """Environment variable names read by EnvLoader."""

    THREADS = "TFSQUEEZE_THREADS"
    OMEGA0 = "TFSQUEEZE_OMEGA0"
    SIGMA = "TFSQUEEZE_SIGMA"
    UPSILON = "TFSQUEEZE_UPSILON"
    LOG_LEVEL = "TFSQUEEZE_LOG_LEVEL"


class ExitCodes:
    """Process exit codes of the command line."""

    OK = 0
    DATA_ERROR = 1
    USAGE_ERROR = 2


class ErrorMessages:
    """Standardized error messages for consistent user feedback."""

    FILE_NOT_FOUND = "File not found: {path}"
    FILE_READ_ERROR = "Error reading file: {path}"
    FILE_WRITE_ERROR = "Error writing file: {path}"
    EMPTY_FILE = "File is empty: {path}"

    SIGNAL_TOO_SHORT = "Signal length {length} is below the minimum of {minimum}"
    NON_FINITE_SAMPLES = "Signal contains non-finite samples"
    BAD_SAMPLE_RATE = "Sample rate must be positive, got {fs}"
    DIRAC_OUT_OF_RANGE = "Dirac time {t0} s lies outside the record [0, {duration}) s"
    DIRAC_PAST_END = "Dirac time {t0} s rounds to sample {index}, past the last sample {last}"
    BAND_ABOVE_NYQUIST = "Band upper edge {omega_hi} rad/s exceeds Nyquist {nyquist} rad/s"
    BAD_BAND = "Band must satisfy 0 <= omega_lo < omega_hi, got [{omega_lo}, {omega_hi}]"
    NON_CAUSAL_GD = "Group delay must be positive over the band (min {min_gd} s)"
    PULSES_OVERFLOW = "{n_pulses} pulses of period {period} s do not fit in {duration} s"
    ZERO_SIGNAL_SNR = "SNR is undefined for an all-zero signal"
    BAD_SNR = "SNR of {snr_db} dB cannot be realized by scaling the noise"

    BAD_WAVELET = "Wavelet parameters must be positive: omega0={omega0}, sigma={sigma}"
    K_MIN_OUT_OF_RANGE = "k_min must satisfy 1 <= k_min < L/2, got {k_min} for L={length}"
    K_MAX_OUT_OF_RANGE = "k_max must satisfy k_min <= k_max <= L/2, got {k_max} (k_min={k_min}, L={length})"
    BAD_SCALE = "Scale must be positive, got {scale}"
    UNKNOWN_WEIGHT = "Unknown window weight: {weight}"

    GRID_MISMATCH = "Grid/signal mismatch: {detail}"
    SHAPE_MISMATCH = "Shape mismatch: {left} vs {right}"
    ORACLE_TOO_LARGE = "Direct oracle refused for L={length} (limit {limit})"

    BAD_UPSILON = "Relative threshold must satisfy 0 < upsilon < 1, got {upsilon}"
    NEGATIVE_UPSILON = "Absolute threshold must be nonnegative, got {upsilon}"
    BAD_ITERATIONS = "Iteration count must be >= 1, got {n}"
    EXP_NEEDS_POWER_OF_TWO = (
        "Exponential iteration needs a power-of-two count, got {n}; "
        "use --iter-mode linear for arbitrary counts"
    )
    UNKNOWN_ITER_MODE = "Unknown iteration mode: {mode}"
    NON_GAUSSIAN_WINDOW = "Closed-form group delay is defined for the Gaussian window only"
    RM_NOT_INVERTIBLE = "Reassigned (rm) output cannot be inverted"
    EMPTY_SELECTION = "Band selects no columns in any row"

    BAD_ALPHA = "Renyi order must satisfy alpha > 0 and alpha != 1, got {alpha}"
    ZERO_MATRIX = "{metric} is undefined for an all-zero matrix"
    ZERO_REFERENCE = "Reconstruction error is undefined for an all-zero reference"
    LENGTH_MISMATCH = "Length mismatch: {left} vs {right}"
    BAD_MIN_SEPARATION = "min_separation_s * fs must be >= 2, got {value}"

    BAD_HEADER = "Corrupt TFR1 header: field '{field}' {detail}"
    BAD_SIGNAL_CSV = "Malformed signal CSV {path}: {detail}"
    BAD_SWEEP = "Malformed SNR sweep '{value}'"
    PROCESSING_ERROR = "Error processing {operation}: {error}"
