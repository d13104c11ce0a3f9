#!/usr/bin/env python3
"""Census of full-length orderings for 2-dimensional codes.

Scaling and shifting an evaluation vector never changes its code, so
orderings split into (q-2)! equivalence classes, one canonical representative
(0, 1, ...) each.  The orderings that fail to correct even one insdel error
are completely characterized: geometric progressions, reversed geometric
progressions, and (for prime q) the arithmetic progression.  The census
classifies every class and cross-checks the verdicts against the exact LCS
engine.
"""

from rsinsdel import field_from_order, field_new
from rsinsdel import analyze
from rsinsdel.cli import table_rows

f7 = field_new(7)

print("Classifying a few orderings over GF(7):")
from rsinsdel import EvaluationVector

for pts in [(0, 1, 2, 3, 4, 5, 6), (0, 1, 3, 2, 6, 4, 5), (0, 1, 2, 5, 3, 6, 4)]:
    verdict = analyze.classify_bad_ordering(EvaluationVector(f7, pts))
    print(" ", pts, "->", verdict.reason, verdict.witness or "")

print()
print("Full census at q = 7 (all 120 classes, each verified exactly):")
census = analyze.census_2dim(f7)
print("  correcting one insdel:", census.classes_correcting_one, "of", census.classes_total)
print("  bad classes by reason:", census.reason_counts)

print()
print("Proportion of correcting classes by field size:")
print(f"  {'q':>3} {'total':>9} {'correcting':>11} {'prop':>6}  method")
for row in table_rows((4, 5, 7, 8, 9, 11, 13)):
    print(
        f"  {row['q']:>3} {row['classes_total']:>9} {row['classes_correcting_one']:>11} "
        f"{row['proportion_3dp']:>6}  {row['method']}"
    )
print()
print("(q = 5 and q = 7 are often quoted as 0.333 and 0.967; those figures")
print(" omit the arithmetic-progression class, which is a distinct bad class")
print(" at prime q - the exact values above are verified three ways.)")
