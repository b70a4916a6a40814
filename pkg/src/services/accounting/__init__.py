from src.services.accounting.leak_study import barrier_leak_study
from src.services.accounting.ledger import (
    build_ledger,
    check_ledger,
    ledger_identity,
    slice_probability,
    spacetime_partition,
)
from src.services.accounting.schemas import (
    LedgerIdentity,
    LeakStudy,
    ProbabilityLedger,
)

__all__ = [
    "LedgerIdentity",
    "LeakStudy",
    "ProbabilityLedger",
    "barrier_leak_study",
    "build_ledger",
    "check_ledger",
    "ledger_identity",
    "slice_probability",
    "spacetime_partition",
]
