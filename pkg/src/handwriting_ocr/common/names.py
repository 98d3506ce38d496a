# DOC: names and constants shared by the recognition pipeline

import string


# REGION: [Template geometry]

TEMPLATE_ROWS = 42
TEMPLATE_COLS = 24
TEMPLATE_SHAPE = (TEMPLATE_ROWS, TEMPLATE_COLS)

# DOC: store order is also the tie-break order
UPPERCASE_LABELS = string.ascii_uppercase
LOWERCASE_LABELS = string.ascii_lowercase
DIGIT_LABELS = string.digits
TEMPLATE_LABELS = UPPERCASE_LABELS + LOWERCASE_LABELS + DIGIT_LABELS

# ENDREGION: [Template geometry]


# REGION: [Pipeline defaults]

MIN_COMPONENT_SIZE = 15
SPACE_RATIO = 0.75
CONNECTIVITY = 8
BLANK_THRESHOLD = 0

GRAYSCALE_WEIGHTS = (0.299, 0.587, 0.114)

# DOC: a constant page lighter than this is treated as blank paper
BLANK_PAGE_INTENSITY = 127

DIAGNOSTICS_TOP_K = 3

# ENDREGION: [Pipeline defaults]


# REGION: [Render defaults]

RENDER_GLYPH_GAP = 3
RENDER_WORD_GAP = 12
RENDER_LINE_GAP = 10
RENDER_MARGIN = 5

INK_INTENSITY = 0
PAPER_INTENSITY = 255

# ENDREGION: [Render defaults]


# REGION: [Environment]

ENV_LOG_LEVEL = "HWOCR_LOG_LEVEL"
ENV_TEMPLATES = "HWOCR_TEMPLATES"
ENV_MIN_COMPONENT = "HWOCR_MIN_COMPONENT"
ENV_SPACE_RATIO = "HWOCR_SPACE_RATIO"
ENV_CONNECTIVITY = "HWOCR_CONNECTIVITY"
ENV_BLANK_THRESHOLD = "HWOCR_BLANK_THRESHOLD"

# ENDREGION: [Environment]


# REGION: [Exit codes]

EXIT_OK = 0
EXIT_IO_ERROR = 1
EXIT_INVALID_CONFIG = 2
EXIT_DEGENERATE_IMAGE = 3

# ENDREGION: [Exit codes]


# REGION: [Debug dump]

DEBUG_GLYPH_FILENAME = "line{line:03d}_glyph{glyph:03d}.png"
DEBUG_SIDECAR_FILENAME = "glyphs.tsv"
DEBUG_SIDECAR_HEADER = ("line", "glyph", "col_offset", "space_before")

# ENDREGION: [Debug dump]


# REGION: [Files]

MANIFEST_COMMENT = "#"
MANIFEST_SEPARATOR = "\t"

SUPPORTED_DRIVERS = ("PNG", "BMP")

# ENDREGION: [Files]
