"""
Environment overrides
Loads HANKEL_* settings from the .env file in the project root
"""
import os
from pathlib import Path
from dotenv import load_dotenv

# Load .env file from project root
project_root = Path(__file__).parent.parent.parent
env_path = project_root / '.env'
load_dotenv(env_path)

ENVIRONMENT_KEYS = {
    "tolerance": ("HANKEL_TOLERANCE", float),
    "samples": ("HANKEL_SAMPLES", int),
    "seed": ("HANKEL_SEED", int),
    "disk_margin": ("HANKEL_DISK_MARGIN", float),
    "reports_dir": ("HANKEL_REPORTS_DIR", str),
}


def get_setting(name: str) -> str:
    """
    Get a setting from environment variables

    Every HANKEL_* variable is optional, so an unset one reads as an empty
    string and the file or default value applies.
    """
    return os.getenv(name, "").strip()


def overrides() -> dict:
    """
    Typed values of every HANKEL_* variable that is set

    Raises:
        ValueError: If a variable does not parse as its type
    """
    values = {}
    for key, (name, kind) in ENVIRONMENT_KEYS.items():
        raw = get_setting(name)
        if not raw:
            continue
        try:
            values[key] = kind(raw)
        except ValueError:
            raise ValueError(f"{name}={raw!r} is not a valid {kind.__name__}")
    return values


if __name__ == "__main__":
    print("Environment overrides:")
    for key, (name, _) in ENVIRONMENT_KEYS.items():
        print(f"{name}: {get_setting(name) or '[NOT SET]'}")
