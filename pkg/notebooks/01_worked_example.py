"""
A seven-customer store, mined three ways
=========================================

Items A..Q are numbered 0..16. We mine all, maximal and closed itemsets at
min_sup = 2 and watch how the head bitmap shrinks along the path A -> AB -> ABC.
"""

from ramp_fim import build_root_index, mine_all, ramp_closed, ramp_max, sample_database
from ramp_fim.bitvec import bitmap_rows
from ramp_fim.dataset import item_supports, letters
from ramp_fim.search import MineOptions
from ramp_fim.mine_all import ramp_all

db = sample_database()
for n, t in enumerate(db.transactions, 1):
    print(f"{n:02d}  {letters(t)}")

# item supports; only A, B, C, D, E, I reach 2
sup = item_supports(db)
print({letters([i]): s for i, s in sorted(sup.items()) if s >= 2})

# one bit per row; W=1 makes every row its own region, like the hand trace
root = build_root_index(db, 2, width=1, row_order="original")
for (item, s), words in zip(root.frequent_items, root.bitmaps):
    print(letters([item]), s, "".join(map(str, words)))

#%% all frequent itemsets
fi = mine_all(root)
print(len(fi), "frequent:", sorted((letters(k), v) for k, v in fi.items()))

#%% projected regions along the leftmost path (1-based, as one would number rows by hand)
def show(head, pbr):
    if letters(head) in ("A", "AB", "ABC"):
        print(f"{letters(head):>4}  PBR = {[r + 1 for r in pbr.tolist()]}")

ramp_all(root, options=MineOptions(order="lexicographic"), on_node=show)

#%% maximal and closed
print("MFI:", sorted((letters(k), v) for k, v in ramp_max(root)))
print("CFI:", sorted((letters(k), v) for k, v in ramp_closed(root)))

# the same thing at a realistic width: all seven rows sit in one 64-bit word
root64 = build_root_index(db, 2, row_order="original")
assert mine_all(root64) == fi
a = root64.item_ids.tolist().index(0)
print("word of A at W=64:", bin(int(root64.bitmaps[a][0])), bitmap_rows(root64.bitmaps[a], 64))
