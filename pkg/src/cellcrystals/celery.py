from celery import Celery

from cellcrystals.setup import setup_env

setup_env()

app = Celery("cellcrystals")

app.config_from_object("django.conf:settings", namespace="CELERY")
app.autodiscover_tasks()
