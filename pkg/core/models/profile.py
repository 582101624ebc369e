from dataclasses import dataclass


@dataclass(frozen=True)
class RunProfile:
    precision_bits: int = 128
    digits: int = 30
    workers: int = 1
    # exact big-rational path guard
    max_m: int = 50_000
    output_format: str = "json"
    log_level: str = "WARNING"
