from agnostic_hexagon.config.errors import *
from agnostic_hexagon.config.from_params import *
from agnostic_hexagon.config.lazy import *
from agnostic_hexagon.config.params import *
from agnostic_hexagon.config.registrable import *

__all__ = ["FromParams", "Params", "Lazy", "Registrable", "ConfigurationError", "RegistrableError"]
