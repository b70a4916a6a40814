import hashlib
from pathlib import Path
from typing import Dict, Iterable


class OutputPaths:
    """File layout of one run directory."""

    FIELD = "field.csv"
    TRAJECTORIES = "trajectories.csv"
    ENSEMBLE = "ensemble.json"
    LEDGER = "ledger.json"
    APPENDIX = "appendix.txt"
    MANIFEST = "manifest.json"

    def __init__(self, root: Path):
        self.root = Path(root)

    def __getitem__(self, name: str) -> Path:
        return self.root / name

    @staticmethod
    def content_hash(path: Path) -> str:
        """SHA-256 hex digest of the file contents."""
        digest = hashlib.sha256()
        with path.open("rb") as handle:
            for chunk in iter(lambda: handle.read(1 << 20), b""):
                digest.update(chunk)
        return digest.hexdigest()

    def content_hashes(self, paths: Iterable[Path]) -> Dict[str, str]:
        return {
            str(path.relative_to(self.root)): self.content_hash(path)
            for path in sorted(paths)
        }
