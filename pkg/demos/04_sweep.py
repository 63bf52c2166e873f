# Full sweep over admissible primes up to 200 and a look at a prime that fails.
import time
import warnings

from dhlseq import build_table, dhl
from dhlseq.analysis import autocorr_profile, classify
from dhlseq.cyclotomy import dhl_admissible
from dhlseq.sequences import ConstructionSpec, construct
from dhlseq.verify import enumerate_admissible_primes, run_all

print("admissible:", enumerate_admissible_primes(200))
t0 = time.perf_counter()
report = run_all(200)
print(report.summary, f"{time.perf_counter() - t0:.1f}s")

# 17 = 1 + 4*4, so f = 4 is even and the DHL sequences are not optimal
print(dhl_admissible(17).reason)
print(sorted(autocorr_profile(dhl(build_table(17), "s1")).offpeak_set()))
with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    u = construct(ConstructionSpec(17, "T1", "0000"), strict=False)
print("p=17 interleaved:", classify(autocorr_profile(u)).verdict)
