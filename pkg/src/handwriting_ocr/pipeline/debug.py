# DOC: optional inspection outputs: glyph crops with a TSV sidecar, and per-glyph score diagnostics

import os
import json
import logging
from typing import Iterable, List, Sequence

from ..common import names as N
from ..common import utils
from ..common.base_models import Glyph, LineTranscript
from .render import to_gray


Logger = logging.getLogger(__name__)



def dump_glyphs(directory, lines: Sequence[Sequence[Glyph]]):
    """Write every glyph crop as PNG plus a (line, glyph, col_offset, space_before) sidecar."""
    os.makedirs(directory, exist_ok=True)
    rows = ["\t".join(N.DEBUG_SIDECAR_HEADER)]
    for line_index, glyphs in enumerate(lines):
        for glyph_index, glyph in enumerate(glyphs):
            filename = N.DEBUG_GLYPH_FILENAME.format(line=line_index, glyph=glyph_index)
            utils.write_png(os.path.join(directory, filename), to_gray(glyph.image))
            rows.append(f"{line_index}\t{glyph_index}\t{glyph.col_offset}\t{glyph.space_before}")

    with open(os.path.join(directory, N.DEBUG_SIDECAR_FILENAME), "w", encoding="utf-8", newline="\n") as sidecar:
        sidecar.write("\n".join(rows) + "\n")
    Logger.info(f"Dumped {len(rows) - 1} glyph crops to {directory}")


def diagnostic_records(lines: Iterable[LineTranscript], top_k: int = N.DIAGNOSTICS_TOP_K) -> List[dict]:
    records = []
    for line_index, line in enumerate(lines):
        for glyph_index, (classification, space_before) in enumerate(line.glyph_results):
            records.append({
                "line": line_index,
                "glyph": glyph_index,
                "label": classification.label,
                "score": classification.score,
                "space_before": space_before,
                "runners_up": [
                    {"label": label, "score": score}
                    for label, score in classification.runners_up(top_k)
                ],
            })
    return records


def write_diagnostics(path, lines: Iterable[LineTranscript], top_k: int = N.DIAGNOSTICS_TOP_K):
    """JSON lines, one record per glyph."""
    os.makedirs(utils.justpath(path), exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as output:
        for record in diagnostic_records(lines, top_k):
            output.write(json.dumps(record) + "\n")
