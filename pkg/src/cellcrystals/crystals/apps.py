from django.apps import AppConfig


class CrystalsConfig(AppConfig):
    name = "cellcrystals.crystals"
