"""Schur polynomials are symmetric -- with an explicit bijection as witness.

Columns of a semistandard tableau become lattice paths whose step numbers
carry the variable labels, so a tableau of weight w is a non-intersecting
family whose east steps sit at positions prescribed by w.  Permuting the
variables is just permuting step positions, which may break disjointness;
bouncing through the tail-swap cancellation repairs it.  The result is a
weight-permuting bijection on tableaux, proving bijectively that the
Schur polynomial is symmetric.
"""

from collections import Counter

from lgvlab import (
    Partition,
    count_tableaux,
    enumerate_tableaux,
    schur_by_enumeration,
    ssyt_encode,
    weight_permutation_map,
)

shape, varcount = Partition([2, 1]), 3
poly = schur_by_enumeration(shape, varcount)
print(f"Schur polynomial of shape {list(shape.parts)} "
      f"in {varcount} variables:")
print(f"  {poly!r}")
print(f"  {count_tableaux(shape, varcount)} tableaux in total\n")

swap = (2, 1, 3)          # exchange the first two variables
print(f"permuting variables by {swap}:")
assert poly.permute_variables([p - 1 for p in swap]) == poly
print("  the polynomial is unchanged -- now watch the tableaux move\n")

for tableau in enumerate_tableaux(shape, varcount):
    image = weight_permutation_map(tableau, swap)
    print(f"  {[list(r) for r in tableau.rows]} weight {tableau.weight()}"
          f"  ->  {[list(r) for r in image.rows]} weight {image.weight()}")

# the interesting weight class: two tableaux share weight (1,1,1), and a
# weight-preserving permutation must shuffle that pair among itself
print("\nweight multiplicities (Kostka numbers):")
for weight, multiplicity in sorted(Counter(
        t.weight() for t in enumerate_tableaux(shape, varcount)).items()):
    print(f"  weight {weight}: {multiplicity}")

pair = [t for t in enumerate_tableaux(shape, varcount)
        if t.weight() == (1, 1, 1)]
reversal = (3, 2, 1)
print(f"\nthe weight-(1,1,1) pair under the full reversal {reversal}:")
for tableau in pair:
    image = weight_permutation_map(tableau, reversal)
    family = ssyt_encode(tableau)
    print(f"  {[list(r) for r in tableau.rows]} "
          f"(words {[p.word for p in family.paths]}) -> "
          f"{[list(r) for r in image.rows]}")
assert {weight_permutation_map(t, reversal) for t in pair} == set(pair)
print("the pair maps onto itself, as a weight-preserving bijection must")
