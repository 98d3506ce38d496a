from dotenv import load_dotenv

load_dotenv()


from . import common
from .common import (
    names,
    errors,
    utils,
    base_models
)

from . import imaging
from . import segmentation
from . import templates
from . import recognition

from . import pipeline
from .pipeline import (
    PipelineConfig,
    RenderSpec,
    render_page,
    recognize_page,
    run_pipeline
)
