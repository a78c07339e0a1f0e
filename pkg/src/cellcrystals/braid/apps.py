from django.apps import AppConfig


class BraidConfig(AppConfig):
    name = "cellcrystals.braid"
