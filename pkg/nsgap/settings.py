"""
Django settings for the nsgap project.

nsgap has no web surface and no database; Django provides the app layout,
settings, logging configuration, management commands and test runner.

Every value can be overridden from the environment or a `.env` file at the
project root (read with python-decouple).
"""

from pathlib import Path

from decouple import config

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# Not used for anything security related here, Django just expects one.
SECRET_KEY = config("SECRET_KEY", default="nsgap-local-only")

DEBUG = config("DEBUG", cast=bool, default=False)

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    "semigroups",
    "congruence",
    "criteria",
    "verification",
    "cli",
]

# Everything is computed in memory.
DATABASES = {}

DEFAULT_AUTO_FIELD = "django.db.models.BigAutoField"

USE_TZ = True

TIME_ZONE = "UTC"


# Logging goes to stderr; stdout is reserved for command output.

NSGAP_LOG_LEVEL = config("NSGAP_LOG_LEVEL", default="WARNING")

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "plain": {
            "format": "%(levelname)s %(name)s: %(message)s",
        },
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "stream": "ext://sys.stderr",
            "formatter": "plain",
        },
    },
    "loggers": {
        app: {
            "handlers": ["console"],
            "level": NSGAP_LOG_LEVEL,
            "propagate": False,
        }
        for app in INSTALLED_APPS
    },
}


# Computation limits

# Largest multiplicity, and largest sieve interval [0, F + a], we allocate for.
NSGAP_SIEVE_LIMIT = config("NSGAP_SIEVE_LIMIT", cast=int, default=5_000_000)


# Command line output

NSGAP_DEFAULT_FORMAT = config("NSGAP_DEFAULT_FORMAT", default="json")

NSGAP_GAP_OUTPUT_LIMIT = config("NSGAP_GAP_OUTPUT_LIMIT", cast=int, default=10_000)


# Verification sweep defaults

NSGAP_VERIFY_SEED = config("NSGAP_VERIFY_SEED", cast=int, default=42)
NSGAP_VERIFY_MAX_B = config("NSGAP_VERIFY_MAX_B", cast=int, default=40)
NSGAP_VERIFY_MAX_A = config("NSGAP_VERIFY_MAX_A", cast=int, default=12)
NSGAP_VERIFY_MAX_HD = config("NSGAP_VERIFY_MAX_HD", cast=int, default=10)
NSGAP_VERIFY_TRIALS = config("NSGAP_VERIFY_TRIALS", cast=int, default=200)
NSGAP_VERIFY_MAX_C = config("NSGAP_VERIFY_MAX_C", cast=int, default=60)
NSGAP_VERIFY_MAX_M = config("NSGAP_VERIFY_MAX_M", cast=int, default=30)
