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
# # Fillings and their statistics
#
# A filling puts a positive integer in every cell of a Young diagram (English
# convention, row 1 on top). Three statistics drive everything else:
#
# - `maj`: for each cell whose entry is larger than the one above it, add the
#   number of cells below it in its column, plus one.
# - `inv`: triples (u, v, w) with w to the right of u in the same row and v
#   directly above u, where an imaginary 0 sits above row 1.
# - `quinv`: the mirror notion, with v' directly below and an imaginary
#   infinity under the bottom of every column.

# %%
from macfill import Filling, content, descents, inv, maj, quinv, n_stat, conjugate

sigma = Filling.from_rows([[1, 3, 5, 5, 6, 8], [2, 4, 2, 7], [3, 1]])
print(sigma.shape, content(sigma))
print(sorted(descents(sigma)), "maj =", maj(sigma))

# %% [markdown]
# A nearby filling of the same shape, with two entries lowered.

# %%
tau = Filling.from_rows([[1, 3, 5, 2, 6, 8], [2, 4, 1, 7], [3, 1]])
print("inv =", inv(tau), "quinv =", quinv(tau), "maj =", maj(tau))

# %% [markdown]
# Both inv and quinv lie between 0 and n(shape'), the sum of C(r, 2) over row lengths r.

# %%
print("upper bound:", n_stat(conjugate(tau.shape)))
row = Filling.from_rows([[5, 4, 3, 2, 1]])
print("decreasing row: inv", inv(row), "quinv", quinv(row))
