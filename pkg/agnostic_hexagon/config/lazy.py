from typing import TypeVar, Generic, Callable, Optional

from agnostic_hexagon.config.errors import ConfigurationError

T = TypeVar("T")


class Lazy(Generic[T]):
    """Defers construction until the extras it depends on are known.

    A run configuration names its test before the posterior exists,
    the test is built once the model has been conditioned.
    Invalid values only surface at that point and come out as a
    `ConfigurationError` naming the deferred type.
    """

    def __init__(self, constructor: Callable[..., T], name: str = "object"):
        self._constructor = constructor
        self.name = name

    def construct(self, **kwargs) -> Optional[T]:
        try:
            return self._constructor(**kwargs)
        except (TypeError, ValueError) as e:
            raise ConfigurationError(f"Could not build the {self.name}: {e}") from e

    def __repr__(self):
        return f"Lazy({self.name})"
