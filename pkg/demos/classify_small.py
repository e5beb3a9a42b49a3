"""Search all slope data up to a bound and keep what survives the obstructions.

Every candidate that is thrown out is charged to the first check it fails.
The survivors are matched against the catalog by canonical form.
"""

import sys

from cohomone.scan import SCAN_TYPES, scan

bound = int(sys.argv[1]) if len(sys.argv) > 1 else 7

for h_type in SCAN_TYPES:
    rep = scan(bound, h_type)
    print(rep.summary())
    example = next(iter(rep.rejections), None)
    if example:
        print(f"  e.g. {example.slopes} rejected by {example.check}: {example.reason}")
    print()
