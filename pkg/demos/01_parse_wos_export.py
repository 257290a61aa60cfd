"""
Parsing a tagged Web-of-Science-style export
============================================

The tagged plain-text format delimits records with ``ER`` lines; fields
start with a two-letter tag and continue on lines indented by three
spaces.  The parser keeps whatever it can use (authors, year, accession
id) and tallies blocks it has to skip instead of failing the whole file.
"""

from bibmet import build_authorship_matrix, build_yearly_series, parse_wos_export

EXPORT = """\
FN Demo export
VR 1.0
PT J
AU Smith, A
   Jones, B
   Garcia, C
TI Return-to-play decisions after mild head injury
PY 2015
UT WOS:000000000000001
ER

PT J
AU Nguyen, D
TI Sideline assessment protocols
PY 2016
UT WOS:000000000000002
ER

PT J
AU Mystery, M
TI A block with no year, skipped but tallied
ER
EF
"""

result = parse_wos_export(EXPORT)
print(f"parsed {len(result.corpus)} records, skipped {result.skipped} block(s)")

for record in result.corpus:
    print(f"  {record.id}: {record.year}, {record.author_count} author(s)")

# Count tables drive everything downstream: papers per year...
series = build_yearly_series(result.corpus)
print()
print(series.to_csv())

# ...and papers by author-count class per year.
matrix = build_authorship_matrix(result.corpus, cap=10, collapse=True)
print(matrix.to_csv())
