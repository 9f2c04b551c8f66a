"""
Centralized path configuration
Uses pathlib for cross-platform compatibility
"""
from pathlib import Path

# Package root - 3 levels up from this file
# config -> shared -> reidemeister
PACKAGE_ROOT = Path(__file__).parent.parent.parent

# Bundled data
DATA_DIR = PACKAGE_ROOT / "data"
GROUPS_DIR = DATA_DIR / "groups"

# Specific files
QUATERNION8_FILE = GROUPS_DIR / "quaternion8.json"

# Configuration files, looked up relative to the working directory
ENV_FILE = Path(".env")
