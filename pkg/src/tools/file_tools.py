"""Reading command inputs and writing command outputs."""
from typing import Dict
from pathlib import Path


class FileTools:
    """File access for the command runner; relative paths resolve against ``root``."""

    def __init__(self, root: Path):
        self.root = Path(root)

    def _resolve(self, path: str) -> Path:
        candidate = Path(path)
        return candidate if candidate.is_absolute() else (self.root / candidate)

    def read_file(self, path: str) -> Dict:
        """Read a text input such as a tree JSON file."""
        try:
            file_path = self._resolve(path)
            if not file_path.exists():
                return {
                    "status": "error",
                    "error": f"File {path} does not exist"
                }
            return {
                "status": "success",
                "content": file_path.read_text(),
                "path": str(file_path)
            }
        except OSError as e:
            return {
                "status": "error",
                "error": str(e)
            }

    def write_file(self, path: str, content: str) -> Dict:
        """Write a rendered result, creating parent directories."""
        try:
            file_path = self._resolve(path)
            file_path.parent.mkdir(parents=True, exist_ok=True)
            file_path.write_text(content)
            return {
                "status": "success",
                "path": str(file_path)
            }
        except OSError as e:
            return {
                "status": "error",
                "error": str(e)
            }
