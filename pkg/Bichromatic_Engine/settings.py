"""
Django settings for the Bichromatic_Engine project.

The project has no web surface: the settings only configure the
``chromatic`` app, its command-line driver and its logging.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/6.0/ref/settings/
"""

import os
from pathlib import Path

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


def env_bool(name, default=False):
    value = os.getenv(name)
    if value is None:
        return default
    return value.strip().lower() in ("1", "true", "yes", "on")


def env_int(name, default=None):
    value = os.getenv(name, "").strip()
    if not value:
        return default
    return int(value)


SECRET_KEY = os.getenv("SECRET_KEY", "sgchrom-local-only-not-a-secret")

DEBUG = env_bool("DEBUG", default=False) or env_bool("SGCHROM_DEBUG", default=False)

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'chromatic',
]

# No tables are used; the dummy backend keeps the test runner from creating one.
DATABASES = {}

USE_TZ = True
TIME_ZONE = 'UTC'


# Logging

SGCHROM_LOG_LEVEL = os.getenv("SGCHROM_LOG_LEVEL", "DEBUG" if DEBUG else "WARNING").upper()

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "plain": {
            "format": "%(asctime)s %(levelname)s %(name)s: %(message)s",
        },
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "formatter": "plain",
        },
    },
    "loggers": {
        "chromatic": {
            "handlers": ["console"],
            "level": SGCHROM_LOG_LEVEL,
            "propagate": False,
        },
    },
}


# Computation

# Entry cap for the deletion-contraction memo; None means unbounded.
SGCHROM_MEMO_CAP = env_int("SGCHROM_MEMO_CAP")
SGCHROM_JOBS = env_int("SGCHROM_JOBS", 1)
SGCHROM_GENERATOR_CAP = env_int("SGCHROM_GENERATOR_CAP", 5000)
SGCHROM_GENERATOR_SEED = env_int("SGCHROM_GENERATOR_SEED", 0)

SGCHROM_REPORT_TITLE = os.getenv("SGCHROM_REPORT_TITLE", "Bivariate Chromatic Verification")
SGCHROM_REPORT_SUBTITLE = os.getenv("SGCHROM_REPORT_SUBTITLE", "Identity and reciprocity suite")
