from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Config:
    max_n: int = 4
    word_bound: int = 4
    seed: int = 20240607
    samples: int = 1000
    tol: float = 1e-4

    def __post_init__(self):
        for name in ("max_n", "word_bound", "samples"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")
        if not self.tol > 0:
            raise ValueError("tol must be positive")
