from enum import Enum


class StructureKind(str, Enum):
    SYMPLECTIC = "Symplectic"
    ANTI_SYMPLECTIC = "AntiSymplectic"
    HAMILTONIAN = "Hamiltonian"
    SKEW_HAMILTONIAN = "SkewHamiltonian"
    SYMMETRIC = "Symmetric"
    SKEW_SYMMETRIC = "SkewSymmetric"


class Variant(str, Enum):
    HT = "HT"
    TH = "TH"
    RDS = "RDS"
    SDR = "SDR"
    MS = "MS"
    AS = "AS"
    MDS = "MDS"
    ADS = "ADS"
    SM = "SM"
    SA = "SA"
    SDM = "SDM"
    SDA = "SDA"


class ChannelCase(str, Enum):
    DR_FORM = "DRForm"
    A_FORM = "AForm"
    DA_FORM = "DAForm"
    AUTO = "Auto"


class GeneratorKind(str, Enum):
    NONDEGENERATE = "nondegenerate"
    SYMPLECTIC = "symplectic"
    SKEW_HAMILTONIAN = "skew_hamiltonian"
    VALID_CHANNEL = "valid_channel"
