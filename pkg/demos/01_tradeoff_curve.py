# Information versus disturbance for the entangling probe.
#
# Run cell by cell in an editor that understands `#%%`, or as a script.

#%%
import numpy as np

from entangling_probe import closed_form as cf
from entangling_probe.reporting import rows_to_csv, sweep_rows

#%% [markdown]
# The probe geometry is set by eta(E) = sqrt(8E(1-2E)). It rises to 1 at
# E = 1/4 and falls back afterwards, which is why sin(mu) has to pick up the
# sign of 1 - 4E for the construction to continue past E = 1/4.

#%%
for e in (0.0, 0.1, 0.2, 0.25, 0.3, 1 / 3):
    mu = cf.mu_components(e)
    print(f"E={e:.4f}  eta={cf.eta(e):.6f}  cos(mu)={mu.cos_mu:+.6f}  sin(mu)={mu.sin_mu:+.6f}")

#%% [markdown]
# The overlap of the two bit-correlated probe states, computed from the
# vectors and from the closed form, and the resulting Renyi gain.

#%%
for e in np.linspace(0, 1 / 3, 7):
    print(
        f"E={e:.4f}  Q(inner)={cf.overlap_q_inner(e):.12f}  Q(closed)={cf.overlap_q_closed(e):.12f}"
        f"  I={cf.renyi_info(e):.6f} bits  P_guess={cf.helstrom_correct_prob(e):.6f}"
    )

#%% [markdown]
# At E = 1/3 the two probe states are orthogonal and the probe learns every
# sifted bit.

#%%
states = cf.correlated_states(1 / 3)
print("<alpha_plus|alpha_minus> =", states.alpha_plus.dot(states.alpha_minus))
print("Renyi gain at 1/3:", cf.renyi_info(1 / 3))

#%% The same table the CLI's `sweep` command writes
print(rows_to_csv(sweep_rows(0, 1 / 3, 5)))
