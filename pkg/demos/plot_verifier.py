"""
Seeded property fuzzing
=======================

Run every registered property over a Heronian corpus. Reports are plain
JSON and depend only on the trial spec, so two runs compare byte for byte.
"""

from omegacircles.serialize import dumps
from omegacircles.verifier import TrialSpec, fuzz

spec = TrialSpec(seed=42, count=30)
report = fuzz(spec)
for name, s in sorted(report["properties"].items()):
    print(f"{name:28s} pass={s['pass']:3d} fail={s['fail']} skip={s['skip']} tiers={s['tiers']}")
print("exit code:", report["exit_code"], " redraws:", report["redraws"])
print("deterministic:", dumps(report) == dumps(fuzz(spec)))
