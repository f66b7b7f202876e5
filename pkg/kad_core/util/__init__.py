from .util import get_logger
from .settings import Settings, get_settings, get_default_settings, load_settings, reset_settings
