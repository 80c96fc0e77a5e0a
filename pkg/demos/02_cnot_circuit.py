# The probe as a single CNOT: signal qubit controls, probe qubit is the target.

#%%
import numpy as np

from entangling_probe import closed_form as cf
from entangling_probe.statevec import Basis, bb84_state, conditional_probe, entangle, joint_outcome_distribution

E = 0.2

#%% [markdown]
# The probe starts in A2(E). After the CNOT the joint amplitudes are ordered
# (e0 w0, e0 w3, e1 w0, e1 w3).

#%%
a1, a2 = cf.probe_basis_states(E)
print("A1 =", a1, "\nA2 =", a2)
for basis in Basis:
    for bit in (0, 1):
        print(basis.name, bit, "signal", np.round(bb84_state(basis, bit), 6), "joint", np.round(entangle(E, basis, bit), 6))

#%% [markdown]
# Conditioning on Bob's result leaves the probe in alpha_minus / 4 (bit 0),
# alpha_plus / 4 (bit 1), or a multiple of alpha on an error.

#%%
states = cf.correlated_states(E)
print("alpha_minus/4 =", states.alpha_minus.scaled(0.25))
print("alpha_plus/4  =", states.alpha_plus.scaled(0.25))
print("alpha/4       =", states.alpha.scaled(0.25))
for basis in Basis:
    for bit in (0, 1):
        state = entangle(E, basis, bit)
        right = conditional_probe(state, basis, bit)
        wrong = conditional_probe(state, basis, 1 - bit)
        print(f"{basis.name} bit {bit}: right {right}  wrong {wrong}  P(error)={wrong.norm_sq():.12f}")

#%% Joint Bob/Eve outcome probabilities, rows = Bob's bit, columns = (w0, w3)
print(joint_outcome_distribution(entangle(E, Basis.B1, 0), Basis.B1))
