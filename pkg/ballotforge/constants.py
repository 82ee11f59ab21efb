# -*- coding: utf-8 -*-

"""
:var EXIT_SUCCESS: The exit code of a successful command.
:var EXIT_ERR_INPUT: The profile file is missing, unreadable or malformed.
:var EXIT_ERR_BUDGET: The bounded search would enumerate more profiles
    than the budget allows.
"""

EXIT_SUCCESS = 0
EXIT_ERR_GENERIC = 1
EXIT_ERR_ARGS = 2
EXIT_ERR_UNIMPLEMENTED = 3
EXIT_ERR_INPUT = 4
EXIT_ERR_BUDGET = 5
EXIT_ERR_CONFIGURED = 6

# rules
RULE_PLURALITY = 'plurality'
RULE_BORDA = 'borda'
RULE_CONDORCET = 'condorcet'
RULE_COPELAND = 'copeland'
RULE_HARE = 'hare'
RULE_COOMBS = 'coombs'
RULE_SEQPAIRS = 'seqpairs'
RULE_DICTATOR = 'dictator'
RULE_LU = 'lu'
RULE_LUR = 'lur'
RULE_UCC = 'ucc'

RULE_NAMES = [
    RULE_PLURALITY,
    RULE_BORDA,
    RULE_CONDORCET,
    RULE_COPELAND,
    RULE_HARE,
    RULE_COOMBS,
    RULE_SEQPAIRS,
    RULE_DICTATOR,
    RULE_LU,
    RULE_LUR,
    RULE_UCC,
]

# the rows of the published comparison table
TABLE_RULES = [
    RULE_CONDORCET,
    RULE_PLURALITY,
    RULE_BORDA,
    RULE_HARE,
    RULE_SEQPAIRS,
    RULE_COPELAND,
    RULE_COOMBS,
    RULE_LU,
    RULE_LUR,
]

# the rules of the social disappointment sweep
SD_RULES = [
    RULE_PLURALITY,
    RULE_CONDORCET,
    RULE_BORDA,
    RULE_HARE,
    RULE_COOMBS,
    RULE_COPELAND,
    RULE_SEQPAIRS,
    RULE_LU,
    RULE_LUR,
]

ANONYMOUS_RULES = frozenset(set(RULE_NAMES) - {RULE_DICTATOR})

DEFAULT_DICTATOR = 0

# criteria
CRITERION_AAW = 'aaw'
CRITERION_CWC = 'cwc'
CRITERION_PARETO = 'pareto'
CRITERION_MONO = 'mono'
CRITERION_IIA = 'iia'
CRITERION_SDC = 'sdc'
CRITERION_CLC = 'clc'
CRITERION_STRICT_SDC = 'strictsdc'

CRITERION_NAMES = [
    CRITERION_AAW,
    CRITERION_CWC,
    CRITERION_PARETO,
    CRITERION_MONO,
    CRITERION_IIA,
    CRITERION_SDC,
    CRITERION_CLC,
    CRITERION_STRICT_SDC,
]

TABLE_CRITERIA = CRITERION_NAMES[:7]

STATUS_VIOLATED = 'confirmed-no'
STATUS_CLEAR = 'no-violation-found'
STATUS_SKIPPED = 'skipped'
STATUS_BY_DEFINITION = 'holds-by-definition'

SOURCE_SEARCH = 'search'
SOURCE_CATALOGUE = 'catalogue'

# published verdicts, True means the rule satisfies the criterion
PUBLISHED_TABLE = {
    RULE_CONDORCET: (False, True, True, True, True, False, True),
    RULE_PLURALITY: (True, False, True, True, False, False, False),
    RULE_BORDA: (True, False, True, True, False, False, True),
    RULE_HARE: (True, False, True, False, False, False, False),
    RULE_SEQPAIRS: (True, True, False, True, False, False, True),
    RULE_COPELAND: (True, True, True, True, False, False, True),
    RULE_COOMBS: (True, False, True, False, False, True, False),
    RULE_LU: (True, False, False, True, False, True, False),
    RULE_LUR: (True, False, True, True, False, True, False),
}

DEFAULT_MAX_M = 4
DEFAULT_MAX_N = 5
DEFAULT_BUDGET = 2000000
MIN_SEARCH_CANDIDATES = 3
EVALUATION_CACHE_SIZE = 200000

# scenarios
SCENARIO_REPLACE10 = 'replace10'
SCENARIO_REPLACE20 = 'replace20'
SCENARIO_DELETE3RD = 'delete3rd'
SCENARIO_BRIBERY = 'bribery'
SCENARIO_INFLUENCE10 = 'influence10'
SCENARIO_REPLACE = 'replace'
SCENARIO_INFLUENCE = 'influence'

SCENARIO_NAMES = [
    SCENARIO_REPLACE10,
    SCENARIO_REPLACE20,
    SCENARIO_DELETE3RD,
    SCENARIO_BRIBERY,
    SCENARIO_INFLUENCE10,
]

GENERIC_SCENARIO_NAMES = [
    SCENARIO_REPLACE,
    SCENARIO_INFLUENCE,
]

KIND_REPLACE = 'replace'
KIND_DELETE = 'delete'
KIND_BRIBERY = 'bribery'
KIND_INFLUENCE = 'influence'

DEFAULT_FRACTION = 0.10

SCENARIOS = {
    SCENARIO_REPLACE10: (KIND_REPLACE, 0.10),
    SCENARIO_REPLACE20: (KIND_REPLACE, 0.20),
    SCENARIO_DELETE3RD: (KIND_DELETE, None),
    SCENARIO_BRIBERY: (KIND_BRIBERY, None),
    SCENARIO_INFLUENCE10: (KIND_INFLUENCE, 0.10),
}

POLL_TIE_BREAK = 'ascending candidate id'

# how a manipulation is judged: the elected candidate after the tie-break
# or the whole winner set
COMPARE_ELECTED = 'elected'
COMPARE_SET = 'set'
COMPARISONS = [COMPARE_ELECTED, COMPARE_SET]
DEFAULT_COMPARISON = COMPARE_ELECTED

# experiments
KIND_SD = 'sd'
KIND_MANIPULATION = 'manipulation'

SD_CANDIDATES = (3, 6)
SD_VOTERS = (6, 7, 8, 9, 10)
SD_PROFILES = 1000

MANIPULATION_CANDIDATES = (3, 10)
MANIPULATION_VOTERS = (10, 100)
MANIPULATION_VOTERS_FULL = (10, 100, 1000)
MANIPULATION_PROFILES = 30

GENERATOR_NAME = 'numpy.random.PCG64 via SeedSequence spawn keys'
SEED_BITS = 63
# master seed of the experiments when neither the flag nor the environment
# gives one
DEFAULT_SEED = 1

# spawn key tags keep the derived streams apart
STREAM_PROFILE = 0
STREAM_SCENARIO = 1
STREAM_INJECTED = 2

RECORD_FIELDS = [
    'rule',
    'scenario',
    'm',
    'n',
    'profile_index',
    'seed',
    'sd',
    'sf',
    'affected',
]

SUMMARY_FIELDS = [
    'rule',
    'scenario',
    'm',
    'count',
]

RECORDS_FILE = 'records.csv'
SUMMARY_FILE = 'summary.csv'
METADATA_FILE = 'metadata.json'
LOG_FILE = 'ballotforge.log'

# profile text format
NAME_HEADER = 'name'
COMMENT_PREFIX = '#'
TEXT_ENCODING = 'ascii'
PARADOX_NAME_PREFIX = 'x'
MIN_PARADOX_SIZE = 3

# application
PARAMETER_CLASS_PREFIX = 'Parameter_'
COMMAND_CLASS_PREFIX = 'Command_'
COMMAND_METHOD_PREFIX = 'command_'
CONST_MEMOIZATION = '__memoization__'

CONST_ACTION = 'ACTION'
CONST_NAME = 'NAME'
CONST_FLAG = 'FLAG'
CONST_ENV = 'ENV'
CONST_SHORT_DESCRIPTION = 'SHORTDESC'
CONST_LONG_DESCRIPTION = 'LONGDESC'
CONST_DEFAULT = 'DEFAULT'
CONST_CHOICES = 'CHOICES'
CONST_POSITIONAL = 'POSITIONAL'
CONST_METHOD = 'METHOD'
CONST_PARALLEL = 'PARALLEL'
CONST_HANDLERS = 'LOG_HANDLERS'

ALIAS_COMMANDS = {
    'help': 'usage',
    'simulate-sd': 'sim-sd',
    'simulate-manipulation': 'sim-manip',
}

BUILTIN_COMMANDS = [
    'usage',
]

FORMAT_TABLE = 'table'
FORMAT_CSV = 'csv'
FORMAT_JSON = 'json'
FORMATS = [FORMAT_TABLE, FORMAT_CSV, FORMAT_JSON]

VALUE_ALL = 'all'

VALUES_TRUE = frozenset(("1", "t", "true", "yes", "y", 'on'))
VALUES_FALSE = frozenset(("0", "f", "false", "no", "n", 'off'))

# environment
VAR_PREFIX = 'BALLOTFORGE_'
VAR_SEED = 'BALLOTFORGE_SEED'
VAR_JOBS = 'BALLOTFORGE_JOBS'
VAR_DEBUG = 'BALLOTFORGE_DEBUG'
VAR_LOG_HANDLERS = 'BALLOTFORGE_LOG_HANDLERS'

# log module
DEFAULT_LOG_HANDLERS = ['console']
LOGGER_NAME = 'ballotforge'
DEFAULT_ENCODING = 'utf-8'
