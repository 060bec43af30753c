"""The tail swap, and the bijection assembled from it by ping-pong.

The tail swap cancels intersecting families in matched pairs: cut the two
lowest-indexed paths through their first common point and exchange the
tails.  Wrapping it as a sijection (a bijection between signed sets) lets
us conjugate the innocent-looking word reversal into a genuine bijection
on plane partitions that swaps the zero-row statistic with the max-row
statistic.

Mapping one plane partition can take several bounces: reverse the words,
and while the result intersects itself, tail-swap and try again.  The
trace below shows a complete itinerary, including the sign of every
intermediate family.
"""

import json

from lgvlab import (
    Partition,
    PlanePartition,
    SignedPathFamily,
    Path,
    plane_partition_endpoints,
    tail_swap,
    zero_to_max_map,
)

# --- the swap itself --------------------------------------------------------

endpoints = plane_partition_endpoints(Partition([1, 1]), 1)
crossed = SignedPathFamily(
    endpoints, (0, 1), [Path((-1, -1), "SE"), Path((-2, -2), "ES")])
print("an intersecting family:")
print(f"  words {[p.word for p in crossed.paths]}, sign {crossed.sign:+d}")
swapped, certificate = tail_swap(crossed)
print(f"after the tail swap at {certificate.point} "
      f"(paths {certificate.to_json()['paths']}):")
print(f"  words {[p.word for p in swapped.paths]}, sign {swapped.sign:+d}")
back, again = tail_swap(swapped)
assert back == crossed and again == certificate
print("swapping again restores the family, with the same certificate\n")

# --- a full orbit through the composed sijection ------------------------------

pp = PlanePartition(Partition([1, 1]), 1, [[1], [0]])
image, trace = zero_to_max_map(pp, with_trace=True)
print(f"mapping {[list(r) for r in pp.rows]} "
      f"(zero-rows {pp.zero_rows()}) through the composed sijection:")
for k, step in enumerate(trace["steps"]):
    words = [p["word"] for p in step["element"]["paths"]]
    print(f"  step {k}: {step['set']:<6} sign {step['sign']}  words {words}")
print(f"image: {[list(r) for r in image.rows]} "
      f"(max-rows {image.max_rows()})")
assert pp.zero_rows() == image.max_rows()

# --- the whole instance at once ---------------------------------------------

shape, bound = Partition([2, 1]), 2
print(f"\nthe bijection on every filling of shape {list(shape.parts)}, "
      f"bound {bound}:")
from lgvlab import enumerate_plane_partitions

longest = 0
for source in enumerate_plane_partitions(shape, bound):
    target, tr = zero_to_max_map(source, with_trace=True)
    longest = max(longest, len(tr["steps"]))
    print(f"  {[list(r) for r in source.rows]} -> "
          f"{[list(r) for r in target.rows]}   "
          f"zeros {source.zero_rows()} = maxes {target.max_rows()}, "
          f"{len(tr['steps'])} steps")
print(f"longest itinerary: {longest} steps")

print("\na trace serializes to JSON for external inspection:")
print(json.dumps(trace, indent=2)[:400] + " ...")
