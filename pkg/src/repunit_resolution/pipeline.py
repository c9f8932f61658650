"""End-to-end verification of one parameter triple."""

from __future__ import annotations

from dataclasses import dataclass, field

from . import encomplex as en
from . import oracle
from .report import CheckReport
from .semigroup import InvariantError, RepunitSemigroup, construct


@dataclass
class RunConfig:
    b: int
    n: int
    a: int
    prime: int = oracle.DEFAULT_PRIME
    trials: int = 5
    bound_margin: int | None = None
    seed: int | None = 0
    fault: str | None = None
    fault_level: int | None = None


@dataclass
class VerificationResult:
    semigroup: RepunitSemigroup
    complex: en.GradedComplex
    checks: list[CheckReport] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def summary(self) -> str:
        ok = sum(c.passed for c in self.checks)
        return f"{ok}/{len(self.checks)} PASS"


def pf_check(S: RepunitSemigroup, table: oracle.OracleBettiTable) -> CheckReport:
    try:
        formula = S.pf_formula()
    except InvariantError as exc:
        return CheckReport("pseudo-frobenius", False, str(exc))
    brute = S.pf_bruteforce()
    if formula != brute:
        return CheckReport("pseudo-frobenius", False,
                           f"formula {sorted(formula)} != brute force {sorted(brute)}")
    # max(PF) is (n-1)c + a*a1 only when c >= 0
    if S.frobenius() != max(formula):
        return CheckReport("pseudo-frobenius", False,
                           f"Frobenius {S.frobenius()} != max PF {max(formula)}")
    from_tor = oracle.pf_from_table(S, table)
    if from_tor != brute:
        return CheckReport("pseudo-frobenius", False,
                           f"top Betti degrees minus sum(a_i) give {sorted(from_tor)}")
    return CheckReport("pseudo-frobenius", True, f"PF = {sorted(brute)}")


def verify(config: RunConfig) -> VerificationResult:
    S = construct(config.b, config.n, config.a)
    gc = en.build_resolution(S)
    if config.fault:
        gc = en.inject_fault(gc, config.fault, config.fault_level)
    bound = oracle.scan_bound(S, gc, config.bound_margin)
    table = oracle.graded_betti_oracle(S, config.prime, bound)
    checks = [
        en.verify_complex(gc),
        en.verify_homogeneity(gc),
        en.verify_minimality(gc),
        en.verify_betti_counts(gc),
        pf_check(S, table),
        oracle.compare_with_oracle(gc, table),
        oracle.hilbert_check(S, gc),
        oracle.generic_rank_check(gc, config.prime, config.trials, config.seed),
    ]
    return VerificationResult(S, gc, checks)
