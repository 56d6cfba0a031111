from enum import Enum

class ViolationKind(str, Enum):
    EXACTNESS = "exactness"
    LENGTH = "length"
    HEIGHT = "height"
    SHAPE = "shape"


class GroupName(str, Enum):
    G1 = "G1"
    G2 = "G2"
    G3 = "G3"
    G4 = "G4"
    G5 = "G5"
    G6 = "G6"
    G7 = "G7"
    G8 = "G8"
    G9 = "G9"
    G10 = "G10"
