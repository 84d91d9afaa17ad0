# Burnside beta - Worked Example Exporter
# Writes text, JSON and LaTeX reports for every worked example group plus a
# CSV summary of the cokernels.

import os
import sys

import pandas as pd

from src.components.catalog import paper_groups
from src.exception import CustomException
from src.logger import logging
from src.pipeline.beta_pipeline import FIELD_TAGS, analyze
from src.pipeline.report import render
from src.utils import load_settings, save_text, timestamped_name


class PaperTableExporter:
    """Runs the full analysis for each worked example and saves every format."""

    def __init__(self, output_dir=None, groups=None):
        self.settings = load_settings()
        self.output_dir = output_dir or self.settings.output_dir
        self.groups = groups or paper_groups()
        self.summary = []
        os.makedirs(self.output_dir, exist_ok=True)

    def export_group(self, group_id):
        report = analyze(group_id, FIELD_TAGS, self.settings)
        base = os.path.join(self.output_dir, report.group_name)
        for fmt, ext in (("text", "txt"), ("json", "json"), ("latex", "tex")):
            save_text(f"{base}.{ext}", render(report, fmt))
        row = {"group": report.group_name, "order": report.group.order,
               "subgroup_classes": len(report.lattice), "kernel_rank": report.kernel_rank}
        for tag in FIELD_TAGS:
            row[f"coker_{tag}"] = report.cokernels[tag].describe()
        self.summary.append(row)
        print(f"✓ {report.group_name:6} | kernel rank {report.kernel_rank} | "
              f"C: {report.cokernels['c'].describe()}")
        return report

    def export_summary(self):
        frame = pd.DataFrame(self.summary)
        filename = os.path.join(self.output_dir, timestamped_name("cokernel_summary", "csv"))
        frame.to_csv(filename, index=False)
        print(f"\n✓ Summary exported: {filename}")
        return frame

    def run_complete_analysis(self):
        print("\n" + "=" * 70)
        print("BURNSIDE BETA - WORKED EXAMPLE EXPORT")
        print("=" * 70)
        for group_id in self.groups:
            try:
                self.export_group(group_id)
            except CustomException as e:
                logging.error("export of %s failed: %s", group_id, e.detail)
                print(f"✗ {group_id}: {e}")
        self.export_summary()
        print("\n" + "=" * 70)
        print("✓ Export Complete!")
        print("=" * 70)


def main():
    try:
        exporter = PaperTableExporter(output_dir=sys.argv[1] if len(sys.argv) > 1 else None)
        exporter.run_complete_analysis()
    except CustomException as e:
        print(f"error: {e}")
        return e.exit_code
    return 0


if __name__ == "__main__":
    sys.exit(main())
