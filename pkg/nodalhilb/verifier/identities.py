import logging
from enum import Enum

logger = logging.getLogger(__name__)


class Identity(Enum):
    HILB_SUPPORT = 'hilb_support'
    NESTED_SUPPORT = 'nested_support'
    LEMMA_A = 'lemma_A'
    LEMMA_B = 'lemma_B'

    @classmethod
    def parse(cls, value) -> 'Identity':
        if isinstance(value, cls):
            return value
        try:
            return cls(value)
        except ValueError:
            known = ', '.join(i.value for i in cls)
            message = f"Unknown identity '{value}', expected one of: {known}"
            logger.error(message)
            raise ValueError(message)


_registered_checks = {}

def identity_check(identity: Identity):
    def register(func):
        if identity in _registered_checks:
            logger.warning(f'Check for {identity.value} is overwritten by {func.__name__}')
        logger.debug(f'Check registered for {identity.value}: {func.__name__}')
        _registered_checks[identity] = func
        return func
    return register

def get_check(identity: Identity):
    identity = Identity.parse(identity)
    if identity not in _registered_checks:
        raise KeyError(f"No check registered for {identity.value}")
    return _registered_checks[identity]

def registered_identities() -> list[Identity]:
    """Registered identities in declaration order of the enum."""
    return [i for i in Identity if i in _registered_checks]
