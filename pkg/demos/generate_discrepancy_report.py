"""Regenerate DISCREPANCIES.md at the repository root.

The report compares the closed-form cocommutator transcription
(verbatim mode) against the table derived from Manin-triple structure
constants, instance by instance. Run from anywhere:

    python3 demos/generate_discrepancy_report.py
"""

import pathlib

from drinfeld_forge import discrepancy_report_markdown


def main() -> None:
    root = pathlib.Path(__file__).resolve().parent.parent
    target = root / "DISCREPANCIES.md"
    text = discrepancy_report_markdown()
    target.write_text(text + "\n", encoding="utf-8")
    print(f"wrote {target} ({len(text.splitlines())} lines)")


if __name__ == "__main__":
    main()
