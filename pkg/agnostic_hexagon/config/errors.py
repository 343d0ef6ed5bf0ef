class ConfigurationError(Exception):
    """A model, test or run description that cannot be read or built."""


class RegistrableError(Exception):
    """Misuse of a registry: a name registered twice, an unknown default
    implementation or a constructor parameter without a type hint."""
