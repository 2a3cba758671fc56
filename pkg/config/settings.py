import json
import os
from pathlib import Path
from typing import Any, Dict


DEFAULTS: Dict[str, Any] = {
    "budget": 200000,
    "threads": 1,
    "seed": 0,
    "diameter_cap": 30000,
    "connectivity_samples": 200,
    "cylindrify_max_steps": 5000,
    "log_level": "WARNING",
    "debug_invariants": False,
}


def _project_root() -> Path:
    # .../fliplab/config/settings.py -> .../fliplab
    return Path(__file__).resolve().parents[1]


def load_settings() -> Dict[str, Any]:
    """
    Loads settings from:
      1) <project_root>/config/settings.json
      2) <project_root>/config/settings_example.json (fallback)
    Keys missing from the file are taken from DEFAULTS.
    FLIPLAB_BUDGET and FLIPLAB_LOG_LEVEL env vars override the file.
    """
    root = _project_root()
    cfg_dir = root / "config"

    candidates = [
        cfg_dir / "settings.json",
        cfg_dir / "settings_example.json",
    ]

    path = next((p for p in candidates if p.exists()), None)
    if path is None:
        raise FileNotFoundError(
            "Settings file not found. Create 'config/settings.json' "
            "(you can copy from 'config/settings_example.json')."
        )

    data = dict(DEFAULTS)
    data.update(json.loads(path.read_text(encoding="utf-8")))

    # env overrides (useful for CI / batch shells)
    env_budget = os.environ.get("FLIPLAB_BUDGET")
    if env_budget:
        try:
            data["budget"] = int(env_budget)
        except ValueError:
            raise ValueError(f"FLIPLAB_BUDGET must be an integer, got {env_budget!r}")

    env_level = os.environ.get("FLIPLAB_LOG_LEVEL")
    if env_level:
        data["log_level"] = env_level.upper()

    if int(data["budget"]) <= 0:
        raise ValueError("budget must be positive")

    return data
