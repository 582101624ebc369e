from enum import Enum


class Command(str, Enum):
    SEQ = "seq"
    PEAK = "peak"
    VERIFY = "verify"
    PQ = "pq"
    DIST = "dist"
    ASYM = "asym"
    RM = "rm"


class OutputFormat(str, Enum):
    JSON = "json"
    CSV = "csv"
    TEXT = "text"
