from __future__ import annotations

import os
import subprocess
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
SRC = ROOT / "src"

if str(SRC) not in sys.path:
    sys.path.insert(0, str(SRC))


def run_cli(cwd: Path, *args: str, env: dict[str, str] | None = None) -> subprocess.CompletedProcess[str]:
    cmd = [sys.executable, "-m", "grunskybounds.cli", *args]
    full_env = os.environ.copy()
    full_env.pop("GRUNSKY_BOX_CAP", None)
    full_env.update(env or {})
    full_env["PYTHONPATH"] = str(SRC)
    return subprocess.run(
        cmd,
        cwd=cwd,
        env=full_env,
        text=True,
        capture_output=True,
        check=False,
    )
