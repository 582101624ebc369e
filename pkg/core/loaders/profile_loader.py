from dataclasses import fields
from pathlib import Path
from typing import Optional

import yaml

from core.models.profile import RunProfile

DEFAULT_PROFILE = "default"


class ProfileLoader:
    def __init__(self, profiles_dir: str = "config/profiles") -> None:
        self.profiles_dir = Path(profiles_dir)

    def load(self, profile_name: str) -> RunProfile:
        if not profile_name or not profile_name.strip():
            raise ValueError("profile_name must be a non-empty string.")

        profile_path = self.profiles_dir / f"{profile_name}.yaml"

        if not profile_path.exists():
            raise FileNotFoundError(f"Profile file not found: {profile_path}")

        data = yaml.safe_load(profile_path.read_text(encoding="utf-8"))

        if data is None:
            data = {}
        if not isinstance(data, dict):
            raise ValueError(f"Profile file must contain a YAML mapping: {profile_path}")

        known = {field.name for field in fields(RunProfile)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ValueError(f"Unknown profile keys in {profile_path}: {', '.join(unknown)}")

        return RunProfile(**data)

    def load_or_default(self, profile_name: Optional[str] = None) -> RunProfile:
        """Explicit names must exist; without one the bundled default is optional."""
        if profile_name is not None:
            return self.load(profile_name)

        if (self.profiles_dir / f"{DEFAULT_PROFILE}.yaml").exists():
            return self.load(DEFAULT_PROFILE)
        return RunProfile()
