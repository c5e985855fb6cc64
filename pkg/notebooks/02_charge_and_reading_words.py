# ---
# jupyter:
#   jupytext:
#     formats: ipynb,py:percent
#     text_representation:
#       extension: .py
#       format_name: percent
#   kernelspec:
#     display_name: Python 3
#     name: python3
# ---

# %% [markdown]
# # Charge, cocharge, and reading words
#
# Charge of a standard word adds k - i for every letter i whose successor sits
# to its right. Words with partition content are cut into standard subwords
# first, either the classical way (right to left, smallest letter first) or
# Killpatrick's way (left to right, largest letter first).

# %%
from macfill import charge, charge_standard, cocharge, killpatrick_decompose, ls_decompose
from macfill.words import word_str

print(charge_standard("1465327"))
w = "121123132213"
print([word_str(v) for v in ls_decompose(w).subwords])
print([word_str(v) for v in killpatrick_decompose(w).subwords])
print("charge", charge(w), charge(w, "killpatrick"), "cocharge", cocharge(w))

# %% [markdown]
# A filling gives a word by listing the row index of each cell, cells sorted
# by decreasing entry with ties broken by one of two cell orders.

# %%
from macfill import Filling, charge_word, cocharge_word, sort_cells

sigma = Filling.from_rows([[1, 3, 5, 5, 6, 8], [2, 4, 2, 7], [3, 1]])
print(sort_cells(sigma, "standard")[:6])
print(sort_cells(sigma, "primed")[:6])
print(word_str(cocharge_word(sigma)), word_str(charge_word(sigma)))
