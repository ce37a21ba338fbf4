import math

from scipy import special


def nakagami_tail_measure(m: float, delta: float, w: float) -> float:
    """
    ∫_w^∞ delta u^(delta-1) P[f > u] du for Nakagami-m marks f, by parts:
    E[f^delta] Q(m+delta, m w) - w^delta Q(m, m w).

    Scaled by c_d s^-delta it is the expected number of nodes connected at threshold s
    whose unfaded path loss exceeds w/s.
    """
    head = math.exp(special.gammaln(m + delta) - special.gammaln(m) - delta * math.log(m))
    if w <= 0:
        return head
    value = head * special.gammaincc(m + delta, m * w) - w ** delta * special.gammaincc(m, m * w)
    return max(float(value), 0.0)
