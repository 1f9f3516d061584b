"""Centralized constants shared by the CLI, the MCP server and the mappers."""


class VersionInfo:
    """Project version information."""
    TOOL_VERSION = "0.1.0"
    MIN_PYTHON_VERSION = "3.11"


class ExitCodes:
    """Process exit codes of the command-line front end."""
    OK = 0              # guaranteed / true / found
    NEGATIVE = 1        # impossible / false / proven none
    UNDECIDED = 2       # unknown / inconclusive
    INPUT_ERROR = 3
    INTERNAL_ERROR = 4


class JSONConfig:
    """Standard settings for JSON output."""
    INDENT = 2
    ENSURE_ASCII = False
    ENCODING = 'utf-8'


class FileExtensions:
    """Supported payload file extensions."""
    JSON = ".json"
    YAML = ".yaml"
    YML = ".yml"

    PAYLOAD_EXTENSIONS = {JSON, YAML, YML}


class PayloadKeys:
    """Keys recognised in input payloads."""
    GRAM = "gram"
    B2_PLUS = "b2_plus"
    B2_MINUS = "b2_minus"
    PARITY = "parity"
    FRAMINGS = "framings"
    LINKING = "linking"
    DEGREE = "degree"
    SOURCE_GRAM = "source_gram"
    TARGET_GRAM = "target_gram"
    MATRIX = "matrix"


class LoggingConfig:
    """Logging configuration."""
    DEFAULT_LEVEL = "WARNING"
    DEFAULT_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    DATE_FORMAT = "%Y-%m-%d %H:%M:%S"
    DEFAULT_LOG_FILE = "lattice_covers.log"
    LOG_DIR = "logs"

    VALID_LEVELS = {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}


# Least degree covered by the branched-covering theorem, and the degree at
# which the branch set may still carry nodes.
MIN_COVERING_DEGREE = 4
NODAL_DEGREE = 4

JSON_INDENT = JSONConfig.INDENT
JSON_ENSURE_ASCII = JSONConfig.ENSURE_ASCII
