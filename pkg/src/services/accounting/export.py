import json
import logging
from pathlib import Path

from src.services.accounting.schemas import ProbabilityLedger

logger = logging.getLogger(__name__)


def ledger_document(ledger: ProbabilityLedger) -> dict:
    document = ledger.model_dump(mode="json", by_alias=True)
    document["equation"] = ledger.identity.equation
    return document


def write_ledger_json(ledger: ProbabilityLedger, path: Path) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(ledger_document(ledger), indent=2))
    logger.info(f"Ledger written to {path}")
    return path
