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
# # Extremal fillings and the maj-preserving bijections
#
# Given the contents of every row, there is exactly one filling with maximal
# inv, one with maximal quinv, one with inv = 0 and one with quinv = 0. Each is
# built greedily row by row. Sending one to the other with the same rows keeps
# maj, because maj equals charge (maximal case) or cocharge (zero case) of the
# appropriate reading word.

# %%
from macfill import build_inv_max, build_quinv_max, build_inv_zero, build_quinv_zero, maj, phi, varphi
from macfill import charge, cocharge, charge_word, cocharge_word

shape = (7, 5, 4, 2)
sets = [[1, 2, 3, 4, 5, 6, 7], [2, 5, 7, 9, 10], [6, 8, 9, 10], [7, 8]]
sigma = build_inv_max(shape, sets)
tau = build_quinv_max(shape, sets)
for f in (sigma, tau):
    print(f)
print("maj", maj(sigma), maj(tau), "charge", charge(charge_word(sigma)), charge(charge_word(tau, "primed")))
assert phi(sigma) == tau

# %%
multisets = [[1, 2, 2, 3, 4, 4, 4], [1, 2, 3, 4, 4], [2, 2, 4, 5], [3, 5]]
sigma = build_inv_zero(shape, multisets)
tau = build_quinv_zero(shape, multisets)
for f in (sigma, tau):
    print(f)
print("maj", maj(sigma), maj(tau), "cocharge", cocharge(cocharge_word(sigma)), cocharge(cocharge_word(tau, "primed")))
assert varphi(sigma) == tau
