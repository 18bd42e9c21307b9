from django.apps import AppConfig


class ChromaticConfig(AppConfig):
    name = 'chromatic'
    verbose_name = 'Bivariate chromatic polynomials'
