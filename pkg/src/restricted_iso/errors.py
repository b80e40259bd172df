
class RestrictedIsoError(Exception):
    '''Base class of every error raised by the toolkit.'''


class DomainMismatch(RestrictedIsoError, ValueError):
    pass


class PointOutOfRange(RestrictedIsoError, ValueError):
    pass


class CapExceeded(RestrictedIsoError):
    '''An enumeration or search would exceed a configured cap.'''


class NotTransitive(RestrictedIsoError, ValueError):
    pass


class NotInvariant(RestrictedIsoError, ValueError):
    pass


class NotRefinement(RestrictedIsoError, ValueError):
    pass


class StructurallyInvalid(RestrictedIsoError, ValueError):
    pass


class NotSubgroup(RestrictedIsoError, ValueError):
    pass


class TransversalCapExceeded(CapExceeded):
    pass


class InconsistentAmbient(RestrictedIsoError, ValueError):
    pass


class OracleUnavailable(RestrictedIsoError):
    '''A recognition step failed outside the desk-scale caps.'''


class PreconditionViolated(RestrictedIsoError, ValueError):
    pass


class T1FullViolation(RestrictedIsoError):
    pass


class NoMapping(RestrictedIsoError):
    pass


class NotInduced(RestrictedIsoError, ValueError):
    pass


class AmbiguousSmallM(RestrictedIsoError):
    pass


class ClassificationFailed(OracleUnavailable):
    pass


class RecognitionFailed(OracleUnavailable):
    pass


class InstanceFormatError(RestrictedIsoError, ValueError):
    pass


class ConfigError(RestrictedIsoError, ValueError):
    '''A configuration value or override that cannot be used.'''
