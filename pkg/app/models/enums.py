import enum


class IdentityId(str, enum.Enum):
    EQ6 = "EQ6"
    EQ10_GF = "EQ10_GF"
    EQ11 = "EQ11"
    EQ12_GF = "EQ12_GF"
    EQ14 = "EQ14"
    EQ15_GF = "EQ15_GF"
    EQ19_INV = "EQ19_INV"
    EQ20_GF = "EQ20_GF"
    EQ22_GF = "EQ22_GF"
    EQ23_GF = "EQ23_GF"
    EQ29_BELL = "EQ29_BELL"
    THM2_1 = "THM2_1"
    THM2_2 = "THM2_2"
    THM2_3 = "THM2_3"
    THM2_4 = "THM2_4"
    THM2_5 = "THM2_5"
    THM2_6 = "THM2_6"
    THM2_7 = "THM2_7"
    THM2_8 = "THM2_8"
    THM2_9_PRINTED = "THM2_9_PRINTED"
    THM2_9_CORRECTED = "THM2_9_CORRECTED"
    THM2_10 = "THM2_10"
    THM2_11 = "THM2_11"
    THM2_12 = "THM2_12"
    THM2_13 = "THM2_13"
    THM2_14 = "THM2_14"
    THM2_15 = "THM2_15"
    THM2_16 = "THM2_16"


class CheckStatus(str, enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    KNOWN_DISCREPANCY = "known-discrepancy"


class OutputFormat(str, enum.Enum):
    JSON = "json"
    CSV = "csv"
