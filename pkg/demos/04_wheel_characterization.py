# Does any other graph share a wheel's alliance polynomial?
#
# Sweep every labelled graph on up to six vertices, bucket them by polynomial,
# and look at the bucket holding A(W_n).  It should contain exactly the
# labellings of W_n: n!/(2(n-1)) of them for n >= 5.

import time
from collections import Counter

from alliance_poly import wheel_polynomial
from alliance_poly.graph import from_edge_mask, is_wheel_labeling
from alliance_poly.verify import labeled_sweep

start = time.perf_counter()
groups = labeled_sweep(range(1, 7))
print(f"{sum(map(len, groups.values()))} graphs, {len(groups)} distinct polynomials "
      f"({time.perf_counter() - start:.1f}s)")

for n in (4, 5, 6):
    matches = groups[wheel_polynomial(n)]
    wheels = sum(is_wheel_labeling(from_edge_mask(*m)) for m in matches)
    print(f"W_{n}: {len(matches)} graphs share the polynomial, {wheels} are wheels")

# Buckets are mostly isomorphism classes; none mixes graphs of different orders here.
spans = Counter(len({order for order, _ in ids}) for ids in groups.values())
print("buckets by number of orders present:", dict(spans))
