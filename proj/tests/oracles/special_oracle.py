"""High-precision erfc and regularized upper incomplete gamma on a fixed grid."""
import json
import pathlib

import mpmath

mpmath.mp.dps = 50


def main():
    out = pathlib.Path(__file__).resolve().parent.parent / "data" / "special_grid.json"
    erfc = []
    for i in range(50):
        x = float(mpmath.mpf(-2) + mpmath.mpf(7) * i / 49)
        erfc.append([x, mpmath.nstr(mpmath.erfc(mpmath.mpf(x)), 30)])
    igamc = []
    for a in ("0.5", "1", "1.5", "2.5", "5", "10", "24.5", "64", "512", "4096"):
        av = mpmath.mpf(a)
        # Four points around the bulk plus one far in the upper tail (a + 8 sqrt(a)).
        xs = [av * mpmath.mpf(f) for f in ("0.3", "0.8", "1", "1.2")] + [av + 8 * mpmath.sqrt(av)]
        for xv in xs:
            x = float(xv)
            q = mpmath.gammainc(av, mpmath.mpf(x), mpmath.inf, regularized=True)
            igamc.append([float(av), x, mpmath.nstr(q, 30)])
    out.write_text(json.dumps({"erfc": erfc, "igamc": igamc}, indent=1) + "\n")


if __name__ == "__main__":
    main()
