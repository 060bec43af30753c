"""From plane partitions to lattice paths, and why a determinant counts them.

Each row of a bounded plane partition becomes a monotone path of east and
south steps; the filling is recovered from where the east steps sit.  Row
statistics turn into step statistics:

  * the row contains 0        <=>  the path's last step is east,
  * the row contains the bound <=> the path's first step is east.

Dropping the disjointness requirement and letting paths connect starts to
ends along any permutation gives the full signed set.  The permanent of
the connection-count matrix counts all of these, the determinant counts
only the non-intersecting ones -- and the signed sum over everything
collapses onto the non-intersecting count, which is the cancellation the
tail swap will witness explicitly.
"""

from lgvlab import (
    Partition,
    PlanePartition,
    count_families,
    count_ni_families,
    enumerate_families,
    first_step_east_count,
    is_nonintersecting,
    last_step_east_count,
    plane_partition_endpoints,
    pp_encode,
)

pp = PlanePartition(Partition([2, 1]), 2, [[2, 0], [1]])
print(f"plane partition {[list(r) for r in pp.rows]}, bound {pp.bound}")
print(f"rows with 0: {pp.zero_rows()}, rows with bound: {pp.max_rows()}\n")

family = pp_encode(pp)
print("encoded as a path family:")
for i, path in enumerate(family.paths):
    print(f"  path {i + 1}: start {path.start}, word {path.word}")
print(f"last-step-east count:  {last_step_east_count(family)}")
print(f"first-step-east count: {first_step_east_count(family)}")
assert last_step_east_count(family) == pp.zero_rows()
assert first_step_east_count(family) == pp.max_rows()

shape, bound = Partition([1, 1]), 1
endpoints = plane_partition_endpoints(shape, bound)
print(f"\nall signed families for shape {list(shape.parts)}, "
      f"bound {bound}:")
for fam in enumerate_families(endpoints):
    tag = "non-intersecting" if is_nonintersecting(fam) else "intersecting"
    sign = "+" if fam.sign == 1 else "-"
    print(f"  sigma={[s + 1 for s in fam.sigma]} sign {sign} "
          f"words {[p.word for p in fam.paths]}  ({tag})")

total = count_families(endpoints)
disjoint = count_ni_families(endpoints)
signed = sum(f.sign for f in enumerate_families(endpoints))
print(f"\npermanent counts every family:      {total}")
print(f"determinant counts the disjoint ones: {disjoint}")
print(f"signed sum over every family:         {signed}")
assert signed == disjoint
