# Seeded BB84 sessions with the probe in the channel, against the closed forms.

#%%
import math

from entangling_probe import closed_form as cf
from entangling_probe.mc_protocol import SessionConfig, run_session

TRIALS = 1_000_000
SEED = 2024

#%%
print(f"{'E':>7} {'sifted':>8} {'dist':>9} {'target':>7} {'eve acc':>9} {'Helstrom':>9} {'I est':>8} {'I':>8}")
for e in (0.0, 0.05, 0.1, 0.25, 0.3, 1 / 3):
    s = run_session(SessionConfig(e, TRIALS, SEED))
    print(
        f"{e:7.4f} {s.sifted_count:8d} {s.disturbance_estimate:9.5f} {e:7.4f} "
        f"{s.eve_accuracy_estimate:9.5f} {cf.helstrom_correct_prob(e):9.5f} "
        f"{s.renyi_estimate_bits:8.5f} {cf.renyi_info(e):8.5f}"
    )

#%% [markdown]
# The disturbance estimate should land within a few binomial standard
# errors of E.

#%%
e = 0.25
s = run_session(SessionConfig(e, TRIALS, SEED))
sigma = math.sqrt(e * (1 - e) / s.sifted_count)
print(f"disturbance off by {(s.disturbance_estimate - e) / sigma:+.2f} sigma")

#%% Same seed, same answer
assert run_session(SessionConfig(e, 10_000, 1)) == run_session(SessionConfig(e, 10_000, 1))
