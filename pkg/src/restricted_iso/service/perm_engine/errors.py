from ...errors import (AmbiguousSmallM, CapExceeded, ClassificationFailed, ConfigError, DomainMismatch,
                       InconsistentAmbient, InstanceFormatError, NoMapping, NotInduced, NotInvariant,
                       NotRefinement, NotSubgroup, NotTransitive, OracleUnavailable, PointOutOfRange,
                       PreconditionViolated, RecognitionFailed, RestrictedIsoError, StructurallyInvalid,
                       T1FullViolation, TransversalCapExceeded)

__all__ = [
    'RestrictedIsoError', 'DomainMismatch', 'PointOutOfRange', 'CapExceeded', 'NotTransitive', 'NotInvariant',
    'NotRefinement', 'StructurallyInvalid', 'NotSubgroup', 'TransversalCapExceeded', 'InconsistentAmbient',
    'OracleUnavailable', 'PreconditionViolated', 'T1FullViolation', 'NoMapping', 'NotInduced',
    'AmbiguousSmallM', 'ClassificationFailed', 'RecognitionFailed', 'InstanceFormatError', 'ConfigError',
]
