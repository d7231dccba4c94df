"""Resource caps for the brute-force kernels.

Caps are configuration, not constants: every expensive operation takes
a ``Caps`` and refuses (``TooLarge``) rather than silently degrading.
"""

from __future__ import annotations

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Caps:
    enumeration: int = 2_000_000        # max q^k codewords to enumerate
    pairs: int = 100_000_000            # max codeword-pair evaluations
    subspaces: int = 10_000_000         # max RREF subspaces for GHW scans
    cosets: int = 2_000_000             # max q^(n-k) cosets in a Groebner run
    frontier: int = 5_000_000           # max pending frontier entries
    homology_vars: int = 16             # max ambient variables for Betti tables
    order_scan: int = 5_000_000         # max pairs in exhaustive order checks
    order_samples: int = 20_000         # sample size when a scan is too large
    mechanism_words: int = 10_000_000   # max words in the cover-completeness scan

    def with_(self, **kw) -> "Caps":
        return replace(self, **kw)


DEFAULT_CAPS = Caps()
