from pathlib import Path
from dotenv import load_dotenv
from apps.common.config import get_env_bool, get_env_float, get_env_int, get_env_list, get_env_str

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# Load environment variables from .env file
load_dotenv(BASE_DIR / '.env')

# Console log level; logs go to stderr. Env: REVBOUND_LOG_LEVEL
LOG_LEVEL = get_env_str('REVBOUND_LOG_LEVEL', 'WARNING').upper()

# JSON-lines log file under LOG_DIR (off by default). Env: REVBOUND_LOG_TO_FILE
LOG_TO_FILE = get_env_bool('REVBOUND_LOG_TO_FILE', False)
LOG_DIR = Path(get_env_str('REVBOUND_LOG_DIR', str(BASE_DIR / 'logs')))

# Holds tolerance when --tolerance is not given. Env: REVBOUND_HOLDS_TOLERANCE
HOLDS_TOLERANCE = get_env_float('REVBOUND_HOLDS_TOLERANCE', 1e-10)

# Sweep parallelism. Output bytes never depend on these.
SWEEP_WORKERS = max(1, get_env_int('REVBOUND_SWEEP_WORKERS', 1))
SWEEP_POOL = get_env_str('REVBOUND_SWEEP_POOL', 'THREAD').upper()

# Default --dims for `sweep`
SWEEP_DIMS = ','.join(get_env_list('REVBOUND_SWEEP_DIMS', '2,3,4'))

# Trials per dimension in the acceptance tests
ACCEPTANCE_TRIALS = max(1, get_env_int('REVBOUND_ACCEPTANCE_TRIALS', 10000))
