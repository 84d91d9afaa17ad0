import os
import sys
from dataclasses import dataclass
from datetime import datetime

from dotenv import load_dotenv

from src.exception import UsageError


@dataclass(frozen=True)
class Settings:
    """Runtime knobs, read from the environment (and a local .env file)."""

    order_cap: int = 1000
    subgroup_cap: int = 5000
    assoc_samples: int = 2000
    output_dir: str = os.path.join("data", "processed")


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"{name} must be an integer, got {raw!r}", sys)
    if value <= 0:
        raise UsageError(f"{name} must be positive, got {value}", sys)
    return value


def load_settings() -> Settings:
    load_dotenv()
    return Settings(
        order_cap=_int_env("BURNSIDE_ORDER_CAP", 1000),
        subgroup_cap=_int_env("BURNSIDE_SUBGROUP_CAP", 5000),
        assoc_samples=_int_env("BURNSIDE_ASSOC_SAMPLES", 2000),
        output_dir=os.getenv("BURNSIDE_OUTPUT_DIR", os.path.join("data", "processed")),
    )


def save_text(path: str, text: str) -> str:
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as file_obj:
        file_obj.write(text)
    return path


def timestamped_name(prefix: str, ext: str) -> str:
    timestamp = datetime.now().strftime('%Y%m%d_%H%M%S')
    return f"{prefix}_{timestamp}.{ext}"
