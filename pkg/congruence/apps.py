from django.apps import AppConfig


class CongruenceConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "congruence"
