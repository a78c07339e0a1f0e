from .celery import app as celery_app

__all__ = ("celery_app",)

__version__ = "1.0.0"
__author__ = "Maykin Media"
__homepage__ = "https://github.com/maykinmedia/cellcrystals"
