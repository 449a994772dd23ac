from django.apps import AppConfig


class SemigroupsConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "semigroups"
