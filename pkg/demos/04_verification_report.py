"""
Cross-checking everything for one genus
=======================================

``cross_check`` runs every identity for C_{2g+1,1} and returns a JSON
ready report; ``check_riemann`` judges Im(tau) at a chosen precision.
"""

import json

from chordslide import CurveSpec, check_riemann, cross_check, period_matrix_direct

report = cross_check(4, precision_bits=128)
for check in report["checks"]:
    print(f"{'ok  ' if check['pass'] else 'FAIL'} {check['name']:32s} {check['seconds']:.3f}s")
print("overall:", report["pass"])

tau = period_matrix_direct(CurveSpec(7, 1, 2), "generic")
print(json.dumps(check_riemann(tau, 256), indent=2))
