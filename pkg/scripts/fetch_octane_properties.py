#!/usr/bin/env python3
"""Template generator for the octane-isomer properties CSV.

The QSPR pipeline needs experimental physicochemical measurements that this
repository does not ship.  This script writes a template CSV with one row
per isomer (named exactly as the enumerator names them) and empty cells for
every property; fill the cells from your measurement source and save the
result as data/octane_properties.csv (or point MEANSOMBOR_OCTANE_CSV at it).

Schema
------
header:  name,AcentFac,BP,HCCP,CT,DENS,DHFORM,DHVAP,HFORM,HV,HVAP,S
rows:    one per isomer; the name must match the enumerator's name
         (isomer names contain commas, so quote them per standard CSV);
         cells are plain decimals, an empty cell means "missing"

Column meanings: acentric factor, boiling point, heat capacity at constant
pressure, critical temperature, relative density, standard enthalpy of
formation, standard enthalpy of vaporization, enthalpy of formation, heat
of vaporization at 25 C, enthalpy of vaporization, entropy.  Units are
whatever the source uses; the pipeline never converts them.
"""

import argparse
import csv
import sys
from pathlib import Path

from meansombor.graphs import enumerate_octane_skeletons

PROPERTIES = [
    "AcentFac", "BP", "HCCP", "CT", "DENS", "DHFORM", "DHVAP",
    "HFORM", "HV", "HVAP", "S",
]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--out",
        default="data/octane_properties.template.csv",
        help="where to write the template (default: %(default)s)",
    )
    args = parser.parse_args()
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    with out.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["name"] + PROPERTIES)
        for skeleton in enumerate_octane_skeletons():
            writer.writerow([skeleton.name] + [""] * len(PROPERTIES))
    print(f"template written to {out}")
    print("fill the measurement cells, then save as data/octane_properties.csv")
    return 0


if __name__ == "__main__":
    sys.exit(main())
