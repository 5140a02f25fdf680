import os
from dotenv import load_dotenv
load_dotenv()

# Logging
LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")

# Output defaults
FLOAT_DIGITS = int(os.getenv("CANTOR_FLOAT_DIGITS", "12"))
DEFAULT_POLICY = os.getenv("CANTOR_DEFAULT_POLICY", "literal")

# Desk-scale limits (approximant(n) holds 2^(n+2) - 1 breakpoints)
MAX_APPROXIMANT_LEVEL = int(os.getenv("CANTOR_MAX_APPROXIMANT_LEVEL", "20"))
MAX_VARIATION_LEVEL = int(os.getenv("CANTOR_MAX_VARIATION_LEVEL", "12"))
MAX_WITNESS_LEVELS = int(os.getenv("CANTOR_MAX_WITNESS_LEVELS", "5000"))
MAX_VERIFY_LEVEL = int(os.getenv("CANTOR_MAX_VERIFY_LEVEL", "12"))
