"""Regenerate src/zetarec/data/reference_zeros.tsv with the Hardy Z locator."""
from pathlib import Path

from mpmath import mp

from zetarec.precision import truncate_decimals
from zetarec.zeros import ZeroLedger, ZeroRecord, locate_zeros, refine_zero, zero_brackets

HIGH, HIGH_PLACES, LOW_PLACES, COUNT = 10, 400, 40, 100

OUT = Path(__file__).resolve().parents[1] / "src" / "zetarec" / "data" / "reference_zeros.tsv"


def main():
    brackets = zero_brackets(COUNT)
    locate_zeros(COUNT, 20)  # index sanity check against the smooth count
    ledger = ZeroLedger()
    for n, (a, b) in enumerate(brackets, start=1):
        places = HIGH_PLACES if n <= HIGH else LOW_PLACES
        z = refine_zero(a, b, places + 20)
        with mp.workdps(places + 30):
            # two extra stored decimals; only ``places`` are certified
            text = truncate_decimals(z, places + 2)
        ledger.append(ZeroRecord(n, text, places, "external"))
    OUT.write_text(ledger.dumps())
    print(f"wrote {len(ledger)} zeros to {OUT}")


if __name__ == "__main__":
    main()
