"""Constants for the EcaSeq toolkit"""


# Application version
APP_VERSION = "1.0.0"
APP_NAME = "EcaSeq"

# Ring sizes
MIN_RING_SIZE = 3
MAX_RING_SIZE = 30
MAX_RAW_SEARCH_SIZE = 9
MAX_CLASS_SEARCH_SIZE = 12
MAX_UNIVERSALITY_SIZE = 20
MAX_COVERING_SIZE = 9
MAX_ISOLATION_SIZE = 8
MAX_WALL_LENGTH = 4

DEFAULT_CLASSIFY_RANGE = (4, 5, 6, 7, 8)

# Neighborhood patterns in the column order of a printed truth table
NEIGHBORHOODS_DESC = (7, 6, 5, 4, 3, 2, 1, 0)

# Diagram rendering
DEFAULT_GLYPHS = "01"
STEP_MARKER = "|"

# Classification categories
ALL_MODES_UNIVERSAL = "all-modes-universal"
ALL_SEQUENTIAL_UNIVERSAL = "all-sequential-universal"
EXISTS_UNIVERSAL_SEQUENTIAL = "exists-universal-sequential"
EXISTS_COVERING = "exists-covering"
NO_COVERING = "no-covering"
RESTRICTED_UNIVERSAL = "restricted-universal"
RESTRICTED_COVERING = "restricted-covering"
NO_FIXED_POINTS = "no-fixed-points"

# Strongest first
CATEGORY_ORDER = (
    ALL_MODES_UNIVERSAL,
    ALL_SEQUENTIAL_UNIVERSAL,
    EXISTS_UNIVERSAL_SEQUENTIAL,
    RESTRICTED_UNIVERSAL,
    EXISTS_COVERING,
    RESTRICTED_COVERING,
    NO_COVERING,
    NO_FIXED_POINTS,
)

WOLFRAM_CLASSES = ("I", "II", "III", "IV")

# Published classification of the rules satisfying one of the asynchronous
# convergence conditions: category -> Wolfram class -> rules
INSIDE_CONDITIONS_TABLE = {
    ALL_MODES_UNIVERSAL: {
        "I": (0, 8, 128, 136),
        "II": (4, 12, 36, 44, 72, 76, 78, 132, 140, 164, 200, 204),
    },
    ALL_SEQUENTIAL_UNIVERSAL: {
        "I": (32, 40, 160, 168),
        "II": (5, 13, 56, 77, 94, 152, 172, 184, 232),
    },
    EXISTS_UNIVERSAL_SEQUENTIAL: {
        "II": (2, 10, 24, 26, 34, 42, 58, 130, 138, 154, 162, 170),
    },
    EXISTS_COVERING: {
        "II": (50, 74, 104, 178),
        "III": (18, 122, 146),
    },
    NO_COVERING: {
        "III": (90,),
        "IV": (106,),
    },
}

# Published classification of the remaining rules. The restriction tag is
# "E" (even ring sizes) or "T" (ring sizes multiple of three).
OUTSIDE_CONDITIONS_TABLE = {
    RESTRICTED_UNIVERSAL: {
        "II": (7, 15),
        "III": (45,),
    },
    RESTRICTED_COVERING: {
        "II": (23,),
        "III": (30,),
    },
    NO_COVERING: {
        "II": (6, 14, 28, 29, 37, 38, 46, 62, 73, 108, 134, 142, 156),
        "III": (22, 60, 105, 126, 150),
        "IV": (54, 110),
    },
    NO_FIXED_POINTS: {
        "II": (1, 3, 9, 11, 19, 25, 27, 33, 35, 41, 43, 51, 57),
    },
}

RESTRICTION_TAGS = {7: "E", 15: "E", 23: "E", 30: "E", 45: "T"}

# Published universal sequential mode counts: (rule, ring size) -> count
PUBLISHED_MODE_COUNTS = {(104, 8): 544, (45, 6): 15, (45, 9): 117}

# Entries backed by simulation evidence only
CONJECTURED_RULES = frozenset([37, 45])

# Rules whose verdict splits by ring-size parity
PARITY_SPLIT_RULES = frozenset([104, 106])
