from django.apps import AppConfig


class UtilsConfig(AppConfig):
    name = "cellcrystals.utils"

    def ready(self):
        from . import checks  # noqa
