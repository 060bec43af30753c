"""Verification suites: run an instance through independent routes and
report every check, with a witness whenever something disagrees.

All suites return the same report shape::

    {"instance": {...}, "results": {...},
     "checks": [{"name": str, "passed": bool, "witness": ...}, ...],
     "runtime_ms": int}

The witness of a passing check is None; a failing check carries enough
data to reproduce the discrepancy.
"""

import time

from .algebra import det_division_free, lgv_matrix
from .bijections import (
    lgv_sijection,
    tail_swap,
    weight_permutation_map,
    zero_to_max_map,
)
from .objects import (
    Partition,
    count_plane_partitions,
    count_tableaux,
    enumerate_partitions,
    enumerate_tableaux,
    genfun_by_enumeration,
    schur_by_enumeration,
)
from .paths import (
    count_families,
    count_ni_families,
    enumerate_families,
    first_step_east_count,
    is_nonintersecting,
    last_step_east_count,
    plane_partition_endpoints,
)
from .sijections import check_compatibility, check_sijection


def _check(name: str, passed: bool, witness=None) -> dict:
    return {"name": name, "passed": bool(passed),
            "witness": None if passed else witness}


def _finish(instance: dict, results: dict, checks: list, started: float) -> dict:
    return {
        "instance": instance,
        "results": results,
        "checks": checks,
        "runtime_ms": int((time.perf_counter() - started) * 1000),
    }


def report_passed(report: dict) -> bool:
    return all(c["passed"] for c in report["checks"])


def verify_theorem1(shape, bound: int, guard_limit: int | None = None) -> dict:
    """Check that all three routes to the refined generating function agree.

    Routes: brute-force enumeration weighted by rows containing 0,
    brute-force weighted by rows containing the bound, and the binomial
    determinant.
    """
    started = time.perf_counter()
    shape = shape if isinstance(shape, Partition) else Partition(shape)
    zeros = genfun_by_enumeration(shape, bound, "zeros", guard_limit)
    maxes = genfun_by_enumeration(shape, bound, "maxes", guard_limit)
    det = det_division_free(lgv_matrix(shape, bound))
    total = count_plane_partitions(shape, bound)
    checks = [
        _check("zeros-matches-maxes", zeros == maxes,
               {"zeros": zeros.to_json(), "maxes": maxes.to_json()}),
        _check("zeros-matches-determinant", zeros == det,
               {"zeros": zeros.to_json(), "determinant": det.to_json()}),
        _check("determinant-at-one-counts-all", det(1) == total,
               {"determinant_at_one": det(1), "count": total}),
    ]
    results = {
        "zeros": zeros.to_json(),
        "maxes": maxes.to_json(),
        "determinant": det.to_json(),
        "count": total,
    }
    instance = {"shape": list(shape.parts), "max": bound}
    return _finish(instance, results, checks, started)


def verify_lgv(shape, bound: int, guard_limit: int | None = None) -> dict:
    """Exercise the path model on one instance.

    Confirms the cancellation story end to end: the permanent counts the
    families, the determinant counts the non-intersecting ones, the tail
    swap is a sign-reversing involution on the rest, and the assembled
    sijection is bijective and statistic-preserving.
    """
    started = time.perf_counter()
    shape = shape if isinstance(shape, Partition) else Partition(shape)
    endpoints = plane_partition_endpoints(shape, bound)
    families = list(enumerate_families(endpoints, guard_limit))
    ni = [f for f in families if is_nonintersecting(f)]
    signed_sum = sum(f.sign for f in families)
    det_count = count_ni_families(endpoints)
    perm_count = count_families(endpoints)

    involution_witness = None
    for family in families:
        if is_nonintersecting(family):
            continue
        swapped, cert = tail_swap(family)
        again, cert_back = tail_swap(swapped)
        if (again != family or cert_back != cert
                or swapped.sign != -family.sign):
            involution_witness = {
                "family": family.to_json(),
                "swapped": swapped.to_json(),
                "certificate": cert.to_json(),
            }
            break

    rejects_witness = None
    for family in ni:
        try:
            tail_swap(family)
            rejects_witness = {"family": family.to_json()}
        except ValueError:
            pass
        break

    sijection = lgv_sijection(endpoints, guard_limit)
    bijective = check_sijection(sijection)
    compat_last = check_compatibility(
        sijection, last_step_east_count, last_step_east_count)
    compat_first = check_compatibility(
        sijection, first_step_east_count, first_step_east_count)

    checks = [
        _check("family-count-matches-permanent", len(families) == perm_count,
               {"enumerated": len(families), "permanent": perm_count}),
        _check("signed-sum-matches-nonintersecting", signed_sum == len(ni),
               {"signed_sum": signed_sum, "nonintersecting": len(ni)}),
        _check("determinant-counts-nonintersecting", det_count == len(ni),
               {"determinant": det_count, "nonintersecting": len(ni)}),
        _check("tail-swap-involution", involution_witness is None,
               involution_witness),
        _check("tail-swap-rejects-disjoint", rejects_witness is None,
               rejects_witness),
        _check("sijection-bijective", bijective == [], bijective),
        _check("compatible-with-last-step-east", compat_last == [],
               compat_last),
        _check("compatible-with-first-step-east", compat_first == [],
               compat_first),
    ]
    results = {
        "families": len(families),
        "nonintersecting": len(ni),
        "signed_sum": signed_sum,
    }
    instance = {"shape": list(shape.parts), "max": bound}
    return _finish(instance, results, checks, started)


def verify_bijection(shape, bound: int, guard_limit: int | None = None) -> dict:
    """Run the zero-to-max map over a whole instance.

    Checks that it is a bijection of the plane partitions onto themselves
    and that it sends the zero-row count to the max-row count.
    """
    started = time.perf_counter()
    shape = shape if isinstance(shape, Partition) else Partition(shape)
    from .objects import enumerate_plane_partitions

    pps = list(enumerate_plane_partitions(shape, bound))
    images = []
    crossing_witness = None
    for pp in pps:
        image = zero_to_max_map(pp, guard_limit=guard_limit)
        images.append(image)
        if crossing_witness is None and pp.zero_rows() != image.max_rows():
            crossing_witness = {
                "input": pp.to_json(), "output": image.to_json(),
                "zero_rows": pp.zero_rows(), "max_rows": image.max_rows(),
            }
    bijective = len(set(images)) == len(pps) and set(images) == set(pps)
    checks = [
        _check("map-is-bijection", bijective,
               {"distinct_images": len(set(images)), "objects": len(pps)}),
        _check("zero-rows-become-max-rows", crossing_witness is None,
               crossing_witness),
    ]
    results = {"objects": len(pps)}
    instance = {"shape": list(shape.parts), "max": bound}
    return _finish(instance, results, checks, started)


def verify_schur(shape, varcount: int, perm=None,
                 guard_limit: int | None = None) -> dict:
    """Check Schur-polynomial symmetry and the weight-permuting bijection.

    Symmetry is verified on every adjacent transposition (which generate
    the full symmetric group) and on ``perm`` itself; the bijection is run
    over all tableaux for ``perm`` (default: the reversal).
    """
    started = time.perf_counter()
    shape = shape if isinstance(shape, Partition) else Partition(shape)
    if perm is None:
        perm = tuple(range(varcount, 0, -1))
    else:
        perm = tuple(int(v) for v in perm)
    poly = schur_by_enumeration(shape, varcount, guard_limit)
    tableaux = list(enumerate_tableaux(shape, varcount))
    det_count = count_tableaux(shape, varcount)

    symmetry_witness = None
    for k in range(varcount - 1):
        swap = list(range(varcount))
        swap[k], swap[k + 1] = swap[k + 1], swap[k]
        permuted = poly.permute_variables(swap)
        if permuted != poly:
            symmetry_witness = {"transposition": [k + 1, k + 2]}
            break
    perm_positions = [v - 1 for v in perm]
    perm_invariant = poly.permute_variables(perm_positions) == poly

    images = []
    weight_witness = None
    for tableau in tableaux:
        image = weight_permutation_map(tableau, perm, guard_limit=guard_limit)
        images.append(image)
        want = [0] * varcount
        got = image.weight()
        for k, count in enumerate(tableau.weight()):
            want[perm[k] - 1] = count
        if weight_witness is None and list(got) != want:
            weight_witness = {
                "input": tableau.to_json(), "output": image.to_json(),
                "expected_weight": want, "got_weight": list(got),
            }
    bijective = len(set(images)) == len(tableaux) and set(images) == set(tableaux)

    checks = [
        _check("tableau-count-matches-determinant",
               len(tableaux) == det_count,
               {"enumerated": len(tableaux), "determinant": det_count}),
        _check("symmetric-under-adjacent-transpositions",
               symmetry_witness is None, symmetry_witness),
        _check("invariant-under-permutation", perm_invariant,
               {"perm": list(perm)}),
        _check("weight-map-is-bijection", bijective,
               {"distinct_images": len(set(images)),
                "tableaux": len(tableaux)}),
        _check("weight-map-permutes-weight", weight_witness is None,
               weight_witness),
    ]
    results = {
        "schur": poly.to_json(),
        "tableaux": len(tableaux),
        "perm": list(perm),
    }
    instance = {"shape": list(shape.parts), "vars": varcount}
    return _finish(instance, results, checks, started)


def sweep(max_size: int, max_bound: int,
          guard_limit: int | None = None) -> dict:
    """Verify the refined counting identity across a grid of instances.

    Runs every shape of size at most ``max_size`` against every bound up
    to ``max_bound`` and records one check per instance.
    """
    started = time.perf_counter()
    checks = []
    instances = 0
    for shape in enumerate_partitions(max_size):
        for bound in range(max_bound + 1):
            instances += 1
            zeros = genfun_by_enumeration(shape, bound, "zeros", guard_limit)
            maxes = genfun_by_enumeration(shape, bound, "maxes", guard_limit)
            det = det_division_free(lgv_matrix(shape, bound))
            ok = zeros == maxes == det
            label = ",".join(str(p) for p in shape.parts) or "empty"
            checks.append(_check(
                f"shape=({label}) max={bound}", ok,
                None if ok else {
                    "zeros": zeros.to_json(), "maxes": maxes.to_json(),
                    "determinant": det.to_json(),
                }))
    results = {
        "instances": instances,
        "failures": sum(1 for c in checks if not c["passed"]),
    }
    instance = {"max_size": max_size, "max_bound": max_bound}
    return _finish(instance, results, checks, started)
