"""
Configuration settings for the operad classifier
"""
from pathlib import Path
import os

from dotenv import load_dotenv

load_dotenv()

# Base paths
BASE_DIR = Path(__file__).resolve().parent.parent
CONFIG_DIR = BASE_DIR / "config"
LOGS_DIR = BASE_DIR / "logs"

# Transcribed case tables (parameter zeros, signatures, solution families)
CASES_FILE = CONFIG_DIR / "cases.yaml"

# Gröbner engine
GROEBNER = {
    "order": "grevlex",
    # column-major reading of the parameter matrix, greatest first: W1, W2, ..., Z4
    "ranking": "column-major",
    # "pairs" for classification runs, "staged" keeps the per-stage trace
    "strategy": os.getenv("OPERADS_GB_STRATEGY", "pairs"),
    "max_stages": 50,
    # below this many pairs a stage is reduced in-process
    "parallel_min_pairs": 200,
}

# Classification runs
CLASSIFICATION = {
    "jobs": int(os.getenv("OPERADS_JOBS", "1")),
    # naming of the parameters: W/X/Y/Z by non-pivot column, or A, B, ... row-major
    "family_scheme": "wxyz",
    "default_scheme": "letters",
}

# Tree enumeration
ENUMERATION = {
    "max_weight": 8,
}

# Output
OUTPUT = {
    "format": "text",
    "json_indent": 2,
}

# Logging
LOGGING = {
    "level": os.getenv("OPERADS_LOG_LEVEL", "WARNING"),
    "file_enabled": os.getenv("OPERADS_LOG_FILE", "0") == "1",
    "file_pattern": "operads_{time:YYYY-MM-DD}.log",
    "rotation": "1 day",
    "retention": "30 days",
    "format": "<green>{time:YYYY-MM-DD HH:mm:ss}</green> | <level>{level: <8}</level> | <cyan>{name}</cyan> - <level>{message}</level>",
}
