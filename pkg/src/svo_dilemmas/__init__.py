"""Sequential social dilemma harness: SVO populations, best-response training,
and zero-shot evaluation against scripted held-out bots."""

__version__ = "0.1.0"

from svo_dilemmas.errors import ConfigError, IntegrityError, LifecycleError

__all__ = ["ConfigError", "IntegrityError", "LifecycleError", "__version__"]
