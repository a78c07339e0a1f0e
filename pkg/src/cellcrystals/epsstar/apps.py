from django.apps import AppConfig


class EpsStarConfig(AppConfig):
    name = "cellcrystals.epsstar"
    verbose_name = "Rightmost scripts and eps-star"
