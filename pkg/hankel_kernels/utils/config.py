"""Configuration management"""
import json
from dataclasses import dataclass
from pathlib import Path

from . import env_settings

DEFAULTS = {
    "tolerance": 1e-8,
    "disk_margin": 1e-9,
    "samples": 64,
    "seed": 0,
    "fft_size": 1024,
    "working_dps": 60,
    "rank_points": 5,
    "section_depth": 6,
    "reports_dir": "reports",
}


@dataclass(frozen=True)
class VerifierSettings:
    """Merged settings: flag > environment > config file > default"""

    tolerance: float = DEFAULTS["tolerance"]
    disk_margin: float = DEFAULTS["disk_margin"]
    samples: int = DEFAULTS["samples"]
    seed: int = DEFAULTS["seed"]
    fft_size: int = DEFAULTS["fft_size"]
    working_dps: int = DEFAULTS["working_dps"]
    rank_points: int = DEFAULTS["rank_points"]
    section_depth: int = DEFAULTS["section_depth"]
    reports_dir: str = DEFAULTS["reports_dir"]


class ConfigManager:
    """Manages verifier configuration"""

    def __init__(self, config_file=None, logger=None):
        if config_file is None:
            config_file = Path.cwd() / "hankel_kernels_config.json"
        self.config_file = Path(config_file)
        self.logger = logger or self._default_logger
        self.config = {}
        self.load()

    @staticmethod
    def _default_logger(message, level='INFO'):
        print(f"[{level}] {message}")

    def load(self):
        """Load configuration from file"""
        if self.config_file.exists():
            try:
                with open(self.config_file, 'r', encoding='utf-8') as f:
                    self.config = json.load(f)
            except Exception as e:
                self.logger(f"Ignoring unreadable config {self.config_file}: {e}", 'WARNING')
                self.config = {}
        else:
            self.config = {}

    def save(self):
        """Save configuration to file"""
        try:
            with open(self.config_file, 'w', encoding='utf-8') as f:
                json.dump(self.config, f, indent=2, ensure_ascii=False)
        except Exception as e:
            self.logger(f"Failed to save config: {e}", 'ERROR')

    def get(self, key, default=None):
        """Get configuration value, falling back to the built-in default"""
        if default is None:
            default = DEFAULTS.get(key)
        return self.config.get(key, default)

    def set(self, key, value):
        """Set configuration value"""
        self.config[key] = value
        self.save()

    def update(self, updates):
        """Update multiple configuration values"""
        self.config.update(updates)
        self.save()

    def settings(self, **overrides) -> VerifierSettings:
        """
        Merge file values, environment overrides and explicit overrides

        Args:
            **overrides: Values from command-line flags; None means unset
        """
        merged = {key: self.get(key) for key in DEFAULTS}
        merged.update(env_settings.overrides())
        merged.update({k: v for k, v in overrides.items() if v is not None})
        return VerifierSettings(**{key: type(DEFAULTS[key])(merged[key]) for key in DEFAULTS})
