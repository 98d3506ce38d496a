from . import names
from . import errors
from . import utils
from . import base_models

utils.disable_warnings()
