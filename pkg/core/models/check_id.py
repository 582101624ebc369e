from enum import Enum


class CheckId(str, Enum):
    LOG_CONCAVITY = "log-concavity"
    STRONG_LOG_CONCAVITY = "strong-log-concavity"
    LEMMA21 = "lemma21"
    PEAK = "peak"
    PROP31 = "prop31"
    PROP32 = "prop32"
    LEMMA33 = "lemma33"
    LEMMA35 = "lemma35"
    LEMMA35_PROBE = "lemma35-probe"
    LEMMA35_BOUND = "lemma35-bound"
    LEMMA36 = "lemma36"
    LEMMA37 = "lemma37"
    LEMMA38 = "lemma38"
    CHAIN = "chain"
    RESIDUE = "residue"
    CLOSED_FORMS = "closed-forms"
    PROP41 = "prop41"
    PROP42 = "prop42"
    PROP43 = "prop43"
    SIGN = "sign"
    PROP51 = "prop51"
    OFFSET = "offset"
    PROP71 = "prop71"
    NORMALIZER = "normalizer"
    MEAN = "mean"
    RM_IDENTITY = "rm-identity"
