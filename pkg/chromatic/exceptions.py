class ChromaticError(RuntimeError):
    pass


class GraphError(ChromaticError):
    pass


class ColoringError(ChromaticError):
    pass


class InterpolationError(ChromaticError):
    pass


class OrientationError(ChromaticError):
    pass


class ConventionError(ChromaticError):
    pass
