from django.apps import AppConfig


class CliConfig(AppConfig):
    name = "cellcrystals.cli"
    verbose_name = "Command line"
