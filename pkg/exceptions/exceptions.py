from utils.core.models import ValidationReport


class HfscError(Exception):
    """Base class for errors that end a command with a specific exit code."""

    exit_code: int = 1

    def __init__(self, detail: str):
        self.detail = detail
        super().__init__(detail)

    def __str__(self) -> str:
        return self.detail

    def __reduce__(self):
        # Subclass constructors take structured arguments, so rebuild from state
        # when crossing a process boundary
        return (_restore, (type(self), self.detail, self.__dict__.copy()))


def _restore(cls: type[HfscError], detail: str, state: dict) -> HfscError:
    exc = cls.__new__(cls)
    Exception.__init__(exc, detail)
    exc.__dict__.update(state)
    return exc


class InvalidArgumentsError(HfscError):
    exit_code = 1


class DimensionMismatchError(HfscError):
    """Raised when a lay or matrix does not match the instance's g×f shape."""
    exit_code = 1

    def __init__(self, what: str, expected: int, observed: int):
        self.expected = expected
        self.observed = observed
        super().__init__(f"{what}: expected {expected} entries, got {observed}")


class InvalidGroupError(HfscError):
    exit_code = 1

    def __init__(self, name: str):
        super().__init__(f"Unknown group: {name}")


class EmptyGroupError(HfscError):
    """Raised when a summary is requested for a group with no case results."""
    exit_code = 1

    def __init__(self, group: str):
        super().__init__(f"No case results for group {group}")


class InstanceValidationError(HfscError):
    exit_code = 2

    def __init__(self, report: ValidationReport, name: str = "instance"):
        self.report = report
        super().__init__(f"{name} is invalid: {report.summary()}")


class PlanValidationError(HfscError):
    exit_code = 2

    def __init__(self, report: ValidationReport, case: str = "plan"):
        self.report = report
        self.case = case
        super().__init__(f"{case} failed validation: {report.summary()}")


class ConstructionStallError(HfscError):
    """Raised when no positive-volume lay exists for the remaining demand,
    even after retrying at full bed targets."""
    exit_code = 3

    def __init__(self, stuck: list[tuple[int, int, int]]):
        # (figure, fabric, remaining) triples
        self.stuck = stuck
        shown = ", ".join(f"s[{i}][{j}]={s}" for i, j, s in stuck[:10])
        more = f" (+{len(stuck) - 10} more)" if len(stuck) > 10 else ""
        super().__init__(f"Construction stalled on remaining demand {shown}{more}")
