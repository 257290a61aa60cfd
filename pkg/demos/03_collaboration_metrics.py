"""
Collaboration indices over an authorship matrix
===============================================

CI (mean team size), DC (share of multi-author papers), CAI (a year's
specialization in a team-size class), CC (one minus the mean of 1/j),
and MCC (CC rescaled so 1 is attainable).  All of them read off the
papers-by-author-count matrix.
"""

from bibmet import TEAM_SIZE_CLASSES, authorship_pattern_report, coauthorship_index, fixtures

# Full matrix: classes 1..50.  Collapsing folds everything >= 10 into a
# top class, which is how collaboration tables are usually printed.
full = fixtures.authorship_matrix()
matrix = full.collapse(10)
print(f"{full.grand_total} papers, {full.author_slots()} author slots, "
      f"mean team size {full.author_slots() / full.grand_total:.2f}")

report = authorship_pattern_report(matrix)
print()
print(report.to_markdown())

# CAI against a finer partition: single / pairs / small teams / large teams.
cai = coauthorship_index(matrix, TEAM_SIZE_CLASSES)
print("CAI by team-size class (100 = matches the decade-wide pattern):")
labels = [label for label, _, _ in TEAM_SIZE_CLASSES]
print("year  " + "  ".join(f"{label:>6}" for label in labels))
for year in matrix.years:
    cells = "  ".join(f"{cai[year][label]:6.1f}" for label in labels)
    print(f"{year}  {cells}")
