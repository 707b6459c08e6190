from __future__ import annotations

import argparse
from pathlib import Path

from cqbounds.cli import csv_rows


def parser(description: str) -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(description=description)
    p.add_argument("--out-dir", default="results", help="directory for the CSV output")
    return p


def write_csv(out_dir: str, name: str, header, rows) -> Path:
    path = Path(out_dir)
    path.mkdir(parents=True, exist_ok=True)
    target = path / name
    target.write_text(csv_rows(header, rows))
    print(f"wrote {target}")
    return target
