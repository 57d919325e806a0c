import numpy as np


def spectrum_gap(numeric, expected) -> float:
    """Largest relative gap under greedy nearest matching of two spectra.

    Sorting complex spectra by (Re, Im) is unstable when conjugate pairs
    carry last-ulp noise in their real parts, so comparisons match each
    expected value to the nearest unused numeric one instead.
    """
    num = list(np.asarray(numeric, dtype=complex).ravel())
    exp = np.asarray(expected, dtype=complex).ravel()
    assert len(num) == len(exp)
    worst = 0.0
    for e in exp:
        j = int(np.argmin([abs(e - v) for v in num]))
        worst = max(worst, abs(e - num[j]) / max(1.0, abs(e)))
        num.pop(j)
    return worst
