"""Exception hierarchy shared by all taut2 modules.

DomainError marks bad inputs or missing prerequisites (CLI exit code 1).
IntegrityError marks violated internal invariants, i.e. bugs or corrupted
data (CLI exit code 2).
"""


class Taut2Error(Exception):
    pass


class DomainError(Taut2Error):
    pass


class IntegrityError(Taut2Error):
    pass


class MissingCacheError(DomainError):
    pass


class CacheVersionError(DomainError):
    pass


class ChecksumError(IntegrityError):
    pass
