"""Exceptions shared by the kernel modules."""


class KernelError(Exception):
    pass


class FuelExhausted(KernelError):
    """A bounded computation ran out of fuel before finishing."""


class NoTypeStep(KernelError):
    """A required type-inference step does not exist (open head reference)."""


class OpenHead(KernelError):
    """Weak head reduction reached a reference that resolves to a Void
    entry or escapes the environment."""


class StuckApplication(KernelError):
    """Weak head reduction found an application whose function reduces to a
    sort; refused rather than classified as a normal form."""


class NoArity(KernelError):
    """Precondition failure: a conversion operand has no arity."""


class Invalid(KernelError):
    """Precondition failure: an operation requiring a valid term was called
    on an invalid one."""
