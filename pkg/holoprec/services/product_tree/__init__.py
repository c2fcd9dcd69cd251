from .ledger import (BitLedger,
                     instrumented,
                     ledger_probe)
from .service import (advance_state,
                      bin_split,
                      join,
                      partial_sum,
                      reduce)
