"""Replaying every case of the delta = 18 argument."""

from threefold_bounds.cases import ScenarioId, corollary_r3, lemma_es_bound, run_scenario, theorem_57
from threefold_bounds.fixtures import delta18

print("== 3. SCENARIO REPLAY ====================================")

data = delta18()

print("1. the global lower bound for L^2...")
print("   L^2 >=", lemma_es_bound(data))

print("2. each case as a chain of exact steps...")
for sid in ScenarioId:
    report = run_scenario(sid, data)
    report.validate()
    print(f"   {sid.value:<18} bound {report.derived_bound:>3}  (claimed {report.paper_claim})")

print("3. one certificate in full...")
print(run_scenario(ScenarioId.SAME_PENCIL, data).to_certificate())

print("4. the worst case and the combined bound...")
print("   r_s(X) <=", theorem_57(data), "  r_3 <=", corollary_r3(data))
