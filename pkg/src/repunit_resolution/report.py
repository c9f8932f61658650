from dataclasses import dataclass


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one verification pass; ``detail`` carries the witness on failure."""

    name: str
    passed: bool
    detail: str = ""

    def __bool__(self) -> bool:
        return self.passed

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  {self.name}" + (f": {self.detail}" if self.detail else "")
