"""Run configuration shared by the CLI and the verification suites."""
from __future__ import annotations

import os
from dataclasses import dataclass


@dataclass
class Config:
    max_weight: int = 8
    output: str = "json"  # or "text"
    seed: int = 42
    parallelism: int = 1

    def __post_init__(self):
        if self.max_weight < 1:
            raise ValueError("max_weight must be at least 1")
        if self.output not in ("json", "text"):
            raise ValueError(f"unknown output mode {self.output!r}")
        if self.parallelism < 1:
            raise ValueError("parallelism must be at least 1")

    @classmethod
    def from_env(cls, **overrides) -> "Config":
        env_weight = os.environ.get("JACK_MAX_WEIGHT")
        if env_weight is not None and "max_weight" not in overrides:
            overrides["max_weight"] = int(env_weight)
        return cls(**overrides)
