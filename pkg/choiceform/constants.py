""" Constants and enums used by the choiceform library. """

# Space kinds
ABSTRACT = 'abstract'
GRID = 'grid'

# Game classes
CHOICE = 'choice'
NORMAL = 'normal'
QUALITATIVE = 'qualitative'

# Equilibrium kinds
EC = 'EC'
SEC = 'SEC'
NASH = 'Nash'
WEAK_NASH = 'WeakNash'
QUAL_EQ = 'QualEq'
QUAL_WEAK_EQ = 'QualWeakEq'
KINDS = [EC, SEC, NASH, WEAK_NASH, QUAL_EQ, QUAL_WEAK_EQ]

# Solver variants
V1 = 'V1' # local intersection selection, continuous fixed point
V2 = 'V2' # weakly convex graph selection
V3 = 'V3' # lower semicontinuous selection, closed graph fixed point
V4 = 'V4' # transfer open-valued lower sections
V5 = 'V5' # open lower section families
VARIANTS = [V1, V2, V3, V4, V5]

# WCG decision tiers
TIER_CONVEX_GRAPH = 'tier1-convex-graph'
TIER_INTERSECTION = 'tier1-intersection'
TIER_SEARCH = 'tier2-search'

# Hypothesis condition names
COND_SPACE = 'a'
COND_CHOICE_NONEMPTY = 'a-choice-nonempty'
COND_SUBFAMILY = 'b'
COND_W_CLOSED = 'b-w-closed'
COND_W_SIMPLEX = 'b-w-simplex'
COND_LOCAL_INTERSECTION = 'c'
COND_WCG = 'c'
COND_CONVEX_GRAPH = 'c-prime'
COND_COMMON_POINT = 'c-double-prime'
COND_CHOICE_OPEN = 'b'
COND_W_OPEN = 'c'
COND_INNER_LSC = 'd'
COND_COVER = 'b'
COND_COVER_PRIME = 'b-prime'
COND_LOWER_OPEN = 'b-lower-open'
COND_LOWER_OPEN_W_CLOSED = 'b-lower-open-w-closed'
COND_OPEN_FAMILY = 'b'
CONVEXITY_CONDITION = {V1: 'd', V2: 'd', V3: 'e', V4: 'c', V5: 'c'}

# Output formats
OUTPUT_JSON = 'json'
OUTPUT_TEXT = 'text'

# Document format
FORMAT_VERSION = 'choiceform/1'
ALL_PROFILES = 'all'

# Constants
DEFAULT_RADIUS = 1 # in mesh steps
DEFAULT_K_MAX = 3
DEFAULT_WCG_BUDGET = 200000 # selection candidates examined by Tier 2
DEFAULT_ORACLE_CAP = 10 ** 6 # profiles
HULL_TOLERANCE = 1e-9

# Exit codes
EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
