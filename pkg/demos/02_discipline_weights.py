"""
Discipline weights and concentration
====================================

A discipline's weight in a year is its share of that year's subject-area
occurrences. Aggregated over the whole period, the same shares tell how many
disciplines are needed to cover 80% of the production.
"""

from fieldevo import aggregate_shares, minimal_covering_set, weight_matrix
from fieldevo.fixtures import load_fixture

corpus = load_fixture("microbiome_like")
weights = weight_matrix(corpus)

first, last = weights.years[0], weights.years[-1]
print(f"{'discipline':45} {first:>6} {last:>6}")
for d in weights.disciplines:
    print(f"{d:45} {weights.weights[first].get(d, 0):6.3f} {weights.weights[last].get(d, 0):6.3f}")

shares = aggregate_shares(corpus)
for threshold in (0.5, 0.8, 0.9):
    cover = minimal_covering_set(shares, threshold)
    print(f"\n{threshold:.0%} of production: {cover.size} disciplines "
          f"(cumulative {cover.cumulative_share:.3f})")
    for name in cover.members:
        print(f"   {name}: {shares.shares[name]:.3f}")
