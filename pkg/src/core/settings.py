#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Configuration Settings for Quartic Reduction
Centralized configuration management with validation and type safety.
"""

import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Dict, Any, List

import psutil
import yaml

from . import constants as const


def _default_batch_workers() -> int:
    """Physical core count, falling back to 1 when psutil cannot tell."""
    env_value = os.getenv('QR_BATCH_WORKERS')
    if env_value:
        return int(env_value)
    return psutil.cpu_count(logical=False) or 1


def _default_cache_dir() -> str:
    return os.getenv('QR_CACHE_DIR', const.DEFAULT_CACHE_DIR)


def _default_cache_enabled() -> bool:
    return os.getenv('QR_DISABLE_CACHE', 'false').lower() != 'true'


@dataclass
class Settings:

    default_primes: List[int] = field(default_factory=lambda: list(const.DEFAULT_PRIMES))
    include_hsop: bool = False
    certificate: bool = False

    seed: int = const.DEFAULT_CALIBRATION_SEED
    slice_samples: int = const.DEFAULT_SLICE_SAMPLES
    picard_samples: int = const.DEFAULT_PICARD_SAMPLES
    cache_enabled: bool = field(default_factory=_default_cache_enabled)
    cache_dir: str = field(default_factory=_default_cache_dir)

    batch_workers: int = field(default_factory=_default_batch_workers)
    show_progress: bool = const.DEFAULT_SHOW_PROGRESS

    def __post_init__(self):
        """Validate settings after initialization."""
        self._validate_settings()

    def _validate_settings(self) -> None:
        """
        Validate all settings are within acceptable ranges.

        Raises:
            ValueError: If any setting is invalid
        """
        if not self.default_primes:
            raise ValueError("At least one default prime is required")

        for prime in self.default_primes:
            if not isinstance(prime, int) or prime < 2:
                raise ValueError(f"Default primes must be integers >= 2, got {prime!r}")

        if self.slice_samples < const.MIN_SLICE_SAMPLES:
            raise ValueError(
                f"Slice samples must be at least {const.MIN_SLICE_SAMPLES}, got {self.slice_samples}"
            )

        if self.picard_samples < const.MIN_PICARD_SAMPLES:
            raise ValueError(
                f"Picard samples must be at least {const.MIN_PICARD_SAMPLES}, got {self.picard_samples}"
            )

        if self.batch_workers < 1:
            raise ValueError(f"Batch workers must be positive, got {self.batch_workers}")

        if not self.cache_dir:
            raise ValueError("Cache directory must not be empty")

    def get_cache_path(self) -> Path:
        """Expanded calibration cache directory."""
        return Path(self.cache_dir).expanduser()

    def calibration_key(self) -> str:
        """Identifier of the calibration inputs, used to name cache entries."""
        return (
            f"recipes-v{const.RECIPE_VERSION}-seed{self.seed}"
            f"-s{self.slice_samples}-p{self.picard_samples}"
        )

    def to_dict(self) -> Dict[str, Any]:
        """Convert settings to dictionary for serialization."""
        return {
            'classification': {
                'default_primes': list(self.default_primes),
                'include_hsop': self.include_hsop,
                'certificate': self.certificate,
            },
            'calibration': {
                'seed': self.seed,
                'slice_samples': self.slice_samples,
                'picard_samples': self.picard_samples,
                'cache_enabled': self.cache_enabled,
                'cache_dir': self.cache_dir,
            },
            'performance': {
                'batch_workers': self.batch_workers,
                'show_progress': self.show_progress,
            }
        }

    @classmethod
    def from_dict(cls, data: Optional[Dict[str, Any]]) -> 'Settings':
        """Create settings from dictionary."""
        valid_params = {
            'default_primes', 'include_hsop', 'certificate',
            'seed', 'slice_samples', 'picard_samples', 'cache_enabled', 'cache_dir',
            'batch_workers', 'show_progress',
        }
        sections = ('classification', 'calibration', 'performance')

        data = data or {}
        kwargs = {}

        # Flatten the nested YAML sections
        for section in sections:
            if section in data and isinstance(data[section], dict):
                kwargs.update(data[section])

        for key, value in data.items():
            if key not in sections:
                kwargs[key] = value

        filtered_kwargs = {k: v for k, v in kwargs.items() if k in valid_params}

        return cls(**filtered_kwargs)

    @classmethod
    def load_from_file(cls, config_path: Path) -> 'Settings':
        """
        Load settings from YAML configuration file.

        Args:
            config_path: Path to configuration file

        Returns:
            Settings instance
        """
        if not config_path.exists():
            return cls()

        try:
            with open(config_path, 'r', encoding='utf-8') as f:
                data = yaml.safe_load(f)
            return cls.from_dict(data)
        except (FileNotFoundError, yaml.YAMLError) as e:
            raise ValueError(f"Failed to load configuration from {config_path}: {e}")

    def save_to_file(self, config_path: Path) -> None:
        """
        Save settings to YAML configuration file.

        Args:
            config_path: Path to save configuration
        """
        config_path.parent.mkdir(parents=True, exist_ok=True)

        with open(config_path, 'w', encoding='utf-8') as f:
            yaml.safe_dump(self.to_dict(), f, default_flow_style=False, allow_unicode=True)


class ConfigManager:
    """
    Configuration manager for application settings.

    Handles loading, saving, and validating configuration files.
    """

    def __init__(self, config_dir: Optional[Path] = None):
        """
        Initialize configuration manager.

        Args:
            config_dir: Directory for configuration files
        """
        if config_dir is None:
            config_dir = Path.cwd() / 'config'

        self.config_dir = config_dir
        self.config_file = config_dir / 'settings.yaml'
        self._settings: Optional[Settings] = None

    def get_settings(self) -> Settings:
        """
        Get current settings, loading from file if needed.

        Returns:
            Settings instance
        """
        if self._settings is None:
            self._settings = Settings.load_from_file(self.config_file)
        return self._settings

    def save_settings(self, settings: Settings) -> None:
        """
        Save settings to file.

        Args:
            settings: Settings to save
        """
        settings.save_to_file(self.config_file)
        self._settings = settings

    def reset_to_defaults(self) -> Settings:
        """
        Reset settings to defaults.

        Returns:
            Default Settings instance
        """
        self._settings = Settings()
        return self._settings
