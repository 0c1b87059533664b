"""
A T10-shaped synthetic benchmark through the command line
=========================================================

100,000 baskets over 1,000 items, average length 10, 200 source patterns.
Mines all, maximal and closed itemsets at 1% support using the CLI entry
point, exactly as a shell user would.
"""

import os
import tempfile

from ramp_fim.cli import main

tmp = tempfile.mkdtemp()
data = os.path.join(tmp, "t10.dat")
main(["gen", "--transactions", "100000", "--items", "1000", "--avg-len", "10",
      "--patterns", "200", "--seed", "7", "--output", data])
print(os.path.getsize(data) // 1024, "KiB written to", data)

# summary lines go to stderr: "<n> itemsets in <t>s (mode=..., width=...)"
for mode in ("all", "max", "closed"):
    main(["mine", "--mode", mode, "--min-sup", "0.01", "--input", data,
          "--output", os.path.join(tmp, f"{mode}.txt")])

# median of repeated runs, word width 32 instead of 64
main(["bench", "--mode", "all", "--min-sup", "0.01", "--input", data, "--repeat", "3", "--width", "32"])

with open(os.path.join(tmp, "max.txt")) as fh:
    longest = max(fh, key=lambda line: len(line.split()))
print("a longest maximal itemset:", longest.strip())
