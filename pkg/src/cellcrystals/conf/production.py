"""
Production environment settings module.

Verification runs are fanned out to the celery workers and errors end up in
Sentry when it is configured.
"""
import os

os.environ.setdefault("VERIFY_FAN_OUT", "yes")

from .includes.base import *  # noqa isort:skip

# Production logging facility.
root_handler = "sentry" if "sentry" in LOGGING["handlers"] else "project"
LOGGING["loggers"].update(
    {
        "": {"handlers": [root_handler], "level": "ERROR", "propagate": False},
        "django": {"handlers": ["project"], "level": "INFO", "propagate": True},
    }
)

#
# Custom settings overrides
#
ENVIRONMENT = "production"
