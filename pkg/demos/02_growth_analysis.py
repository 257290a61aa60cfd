"""
Growth ratios, relative growth rate, doubling time
==================================================

Uses the bundled reference dataset (brain-concussion research output,
2008-2017).  The ``paper`` RGR convention subtracts the log of the
annual output from the log of the cumulative output, which is what
legacy scientometric growth tables tabulate; ``standard`` is the
textbook log increment of the cumulative count.
"""

from bibmet import build_growth_report, fixtures, relative_growth_rate

series = fixtures.yearly_counts()
print(f"{series.total} papers over {series.years[0]}-{series.years[-1]}")

report = build_growth_report(series, convention="paper", block_split=4)
print()
print(report.to_markdown())

# The growth rate of output halves its doubling time when it doubles:
for row in report.rows[1:3]:
    print(f"{row.year}: rgr={row.rgr:.3f}  doubling time={row.doubling_time:.3f} years")

# Compare the two conventions side by side.
paper = relative_growth_rate(series, "paper")
standard = relative_growth_rate(series, "standard")
print()
print("year  paper-convention  standard-convention")
for (year, a), (_, b) in zip(paper.entries[1:], standard.entries[1:]):
    print(f"{year}  {a:.3f}             {b:.3f}")
