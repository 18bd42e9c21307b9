from django.db import models


class Mode(models.TextChoices):
    SIGNED = "signed", "Signed"
    UNSIGNED = "unsigned", "Unsigned"


class EdgeKind(models.TextChoices):
    LINK = "link", "Link"
    LOOP = "loop", "Loop"
    HALFEDGE = "halfedge", "Halfedge"
    LOOSE = "loose", "Loose edge"


class Convention(models.TextChoices):
    # Meaning of the formal variables (lambda, mu) in terms of (k, l).
    SIGNED = "signed", "signed: λ=2k+1, μ=2l"
    ZERO_FREE = "zero-free", "zero-free: λ=2k, μ=2l"
    UNSIGNED = "unsigned", "unsigned: λ=k, μ=l"

    @property
    def lambda_affine(self):
        """(a, b) with λ = a*k + b."""
        return {
            Convention.SIGNED: (2, 1),
            Convention.ZERO_FREE: (2, 0),
            Convention.UNSIGNED: (1, 0),
        }[self]

    @property
    def mu_scale(self):
        return 1 if self == Convention.UNSIGNED else 2

    def arguments(self, k, l):
        a, b = self.lambda_affine
        return a * k + b, self.mu_scale * l


class Provenance(models.TextChoices):
    DELETION_CONTRACTION = "deletion-contraction", "Deletion–contraction"
    SUBSET_EXPANSION = "subset-expansion", "Subset expansion"
    INTERPOLATION = "interpolation", "Interpolation"


class Palette(models.TextChoices):
    SIGNED = "signed", "[±(k+l)]"
    ZERO_FREE = "zero-free", "[±(k+l)] without 0"
    UNSIGNED = "unsigned", "[k+l]"

    def colors(self, k, l):
        bound = k + l
        if self == Palette.UNSIGNED:
            return tuple(range(1, bound + 1))
        colors = range(-bound, bound + 1)
        if self == Palette.ZERO_FREE:
            return tuple(c for c in colors if c)
        return tuple(colors)
