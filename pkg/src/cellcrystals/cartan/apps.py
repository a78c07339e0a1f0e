from django.apps import AppConfig


class CartanConfig(AppConfig):
    name = "cellcrystals.cartan"
