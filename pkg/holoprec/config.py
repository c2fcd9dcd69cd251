PROJECT_NAME = 'holoprec'

DEFAULT_SETTINGS_PATH = 'settings.yml'

# leaf size of product trees
DEFAULT_THRESHOLD = 16
THRESHOLD_ENVIRONMENT_VARIABLE = 'HOLOPREC_THRESHOLD'

DEFAULT_PRECISION = 64
DEFAULT_BOUND_MODE = 'certified'
DEFAULT_WORKERS = 1
# bit precisions of untrusted eigenvalue hints, tried in order
DEFAULT_HINT_PRECISIONS = (53, 106, 212)

DEFAULT_BENCH_PRECISIONS = (2 ** 14, 2 ** 15, 2 ** 16, 2 ** 17, 2 ** 18)
DEFAULT_BENCH_MODES = ('classic', 'trunc')

# slack of the working precision assertion of truncated products
WORKING_PRECISION_SLACK = 64
MAX_EXPONENT = 2 ** 62
