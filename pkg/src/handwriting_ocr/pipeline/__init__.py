from . import config
from . import render
from . import debug
from . import runner

from .config import PipelineConfig, RenderSpec
from .render import render_page
from .runner import PageRecognizer, PageTranscript, recognize_page, run_pipeline
