"""Exception types shared across the package."""


class MwlatError(Exception):
    """Base class for all package errors."""


class DimensionError(MwlatError):
    pass


class ShapeError(MwlatError):
    pass


class DomainError(MwlatError):
    pass


class EliminationError(MwlatError):
    pass


class NormalizationError(MwlatError):
    pass


class ReductionError(MwlatError):
    pass


class EmbeddingError(MwlatError):
    pass


class SpecializationError(MwlatError):
    pass


class FormulaError(MwlatError):
    pass


class DuplicateError(MwlatError):
    pass


class DefinitenessError(MwlatError):
    pass


class DegenerateSystemError(MwlatError):
    pass


class BudgetError(MwlatError):
    pass


class InconsistencyError(MwlatError):
    pass


class ConfigurationError(MwlatError):
    pass


class InputError(MwlatError):
    pass
