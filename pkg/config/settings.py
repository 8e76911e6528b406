import os
from pathlib import Path
from dotenv import load_dotenv

# Load environment variables from .env file
env_path = Path(__file__).parent.parent / '.env'
load_dotenv(dotenv_path=env_path)

# Application settings
APP_NAME = "Superzeta Toolkit"
APP_VERSION = "1.0.0"
DEBUG = os.getenv('DEBUG', 'False').lower() == 'true'

# Evaluation context defaults
TARGET_REL_ERROR = float(os.getenv('TARGET_REL_ERROR', '1e-10'))
SERIES_TRUNCATION = int(os.getenv('SERIES_TRUNCATION', '100000'))
QUADRATURE_NODES = int(os.getenv('QUADRATURE_NODES', '32'))
DERIVATIVE_STEP = float(os.getenv('DERIVATIVE_STEP', '1e-2'))

# Numerical policy
SPLIT_POINT = float(os.getenv('SPLIT_POINT', '1.0'))
MAX_DERIVATIVE_ORDER = 8
RICHARDSON_LEVELS = 4
RESIDUE_CONTOUR_RADIUS = 0.25
CAUCHY_NODES = 64
EULER_MACLAURIN_SHIFT = 20
EULER_MACLAURIN_TERMS = 30

# CLI settings
DEFAULT_THREADS = int(os.getenv('DEFAULT_THREADS', '1'))
OUTPUT_FORMATS = ['csv', 'json']
DEFAULT_FORMAT = 'csv'
FIXTURE_PATH = Path(__file__).parent.parent / 'data' / 'fixtures'

# Logging settings
LOG_LEVEL = os.getenv('LOG_LEVEL', 'WARNING')
LOG_FILE = os.getenv('LOG_FILE', '')
