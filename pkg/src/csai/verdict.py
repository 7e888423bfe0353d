from dataclasses import dataclass


@dataclass(frozen=True)
class Verdict:
    """A boolean outcome carrying the reason it failed, if it did."""

    ok: bool
    reason: str | None = None

    def __bool__(self):
        return self.ok

    @classmethod
    def passed(cls):
        return cls(True)

    @classmethod
    def failed(cls, reason):
        return cls(False, reason)
