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
# # Generating functions over a bounded alphabet
#
# Summing q^inv t^maj x^sigma over all fillings with entries in {1..n} gives the
# modified Macdonald polynomial in n variables. Using quinv instead gives the
# same polynomial. The top q-coefficient is the q-Whittaker polynomial and the
# q-constant term the modified Hall-Littlewood polynomial.

# %%
from macfill import conjugate, macdonald_poly, modified_hall_littlewood, q_whittaker, conjecture_match

shape, n = (2, 1), 2
H = macdonald_poly(shape, n, "inv")
print(H.to_text())
print(H == macdonald_poly(shape, n, "quinv"))
print(H.swap_qt() == macdonald_poly(conjugate(shape), n))

# %%
print(q_whittaker(shape, n).to_text())
print(modified_hall_littlewood(shape, n, "quinv_zero_sum").to_text())

# %% [markdown]
# The open question is whether inv and quinv can be swapped filling by filling
# while keeping rows and maj. At desk scale the classes always have matching
# sizes, so a canonical pairing exists.

# %%
pairs = conjecture_match((2, 2), 2)
print(len(pairs), "pairs")
for p in pairs[:4]:
    print(p.sigma, "->", p.delta, "maj", p.maj, "stat", p.stat)
