"""Straight transcription of the SP 800-22 statistics used by the C++ subset.

Checks the worked examples of the NIST document and writes P-values for a
fixed 100000-bit stream to tests/data/nist_golden.json.
"""
import hashlib
import json
import math
import pathlib

from scipy.special import erfc, gammaincc
from scipy.stats import norm


def monobit(e):
    s = sum(2 * b - 1 for b in e)
    return erfc(abs(s) / math.sqrt(len(e)) / math.sqrt(2))


def block_frequency(e, M):
    N = len(e) // M
    chi = 4 * M * sum((sum(e[i * M:(i + 1) * M]) / M - 0.5) ** 2 for i in range(N))
    return gammaincc(N / 2, chi / 2)


def cusum(e, reverse=False):
    x = list(reversed(e)) if reverse else e
    n, s, z = len(x), 0, 0
    for b in x:
        s += 2 * b - 1
        z = max(z, abs(s))
    trunc = lambda a, b: int(a / b)  # C division
    t1 = 0.0
    for k in range(trunc(trunc(-n, z) + 1, 4), trunc(trunc(n, z) - 1, 4) + 1):
        t1 += norm.cdf((4 * k + 1) * z / math.sqrt(n)) - norm.cdf((4 * k - 1) * z / math.sqrt(n))
    t2 = 0.0
    for k in range(trunc(trunc(-n, z) - 3, 4), trunc(trunc(n, z) - 1, 4) + 1):
        t2 += norm.cdf((4 * k + 3) * z / math.sqrt(n)) - norm.cdf((4 * k + 1) * z / math.sqrt(n))
    return 1 - t1 + t2


def runs(e):
    n = len(e)
    pi = sum(e) / n
    if abs(pi - 0.5) >= 2 / math.sqrt(n):
        return 0.0
    v = 1 + sum(e[i] != e[i + 1] for i in range(n - 1))
    return erfc(abs(v - 2 * n * pi * (1 - pi)) / (2 * math.sqrt(2 * n) * pi * (1 - pi)))


def longest_run(e):
    n = len(e)
    if n < 6272:
        M, V, pi = 8, [1, 2, 3, 4], [0.21484375, 0.3671875, 0.23046875, 0.1875]
    elif n < 750000:
        M, V = 128, [4, 5, 6, 7, 8, 9]
        pi = [0.1174035788, 0.242955959, 0.249363483, 0.17517706, 0.102701071, 0.112398847]
    else:
        M, V = 10000, [10, 11, 12, 13, 14, 15, 16]
        pi = [0.0882, 0.2092, 0.2483, 0.1933, 0.1208, 0.0675, 0.0727]
    N = n // M
    nu = [0] * len(V)
    for i in range(N):
        block = "".join(map(str, e[i * M:(i + 1) * M]))
        longest = max(len(r) for r in block.split("0"))
        idx = min(max(longest, V[0]), V[-1]) - V[0]
        nu[idx] += 1
    chi = sum((nu[i] - N * pi[i]) ** 2 / (N * pi[i]) for i in range(len(V)))
    return gammaincc((len(V) - 1) / 2, chi / 2)


def pattern_counts(e, m):
    n = len(e)
    ext = e + e[: m - 1]
    counts = {}
    for i in range(n):
        key = tuple(ext[i:i + m])
        counts[key] = counts.get(key, 0) + 1
    return counts


def apen(e, m):
    n = len(e)

    def phi(mm):
        if mm == 0:
            return 0.0
        return sum(c / n * math.log(c / n) for c in pattern_counts(e, mm).values())

    ap = phi(m) - phi(m + 1)
    return gammaincc(2 ** (m - 1), n * (math.log(2) - ap))


def serial(e, m):
    n = len(e)

    def psi(mm):
        if mm <= 0:
            return 0.0
        return 2 ** mm / n * sum(c * c for c in pattern_counts(e, mm).values()) - n

    d1 = psi(m) - psi(m - 1)
    d2 = psi(m) - 2 * psi(m - 1) + psi(m - 2)
    return gammaincc(2 ** (m - 2), d1 / 2), gammaincc(2 ** (m - 3), d2 / 2)


def bits(s):
    return [int(c) for c in s]


def worked_examples():
    lr128 = ("11001100000101010110110001001100111000000000001001001101010100010001001111010110"
             "100000001101011111001100111001101101100010110010")
    return {
        "monobit": monobit(bits("1011010101")),
        "block_frequency": block_frequency(bits("0110011010"), 3),
        "runs": runs(bits("1001101011")),
        "cusum_forward": cusum(bits("1011010111")),
        "apen": apen(bits("0100110101"), 3),
        "serial": serial(bits("0011011101"), 3),
        "longest_run_128": longest_run(bits(lr128)),
    }


def stream(n_bits):
    out, ctr = [], 0
    while len(out) < n_bits:
        block = hashlib.sha256(b"nist-oracle" + ctr.to_bytes(8, "big")).digest()
        out += [(b >> (7 - j)) & 1 for b in block for j in range(8)]
        ctr += 1
    return out[:n_bits]


def main():
    ex = worked_examples()
    for k, v in ex.items():
        print(k, v)
    e = stream(100000)
    p1, p2 = serial(e, 13)
    golden = {
        "seed": "nist-oracle",
        "n_bits": len(e),
        "Frequency Monobit": monobit(e),
        "Block Frequency": block_frequency(e, 128),
        "Cusum Forward": cusum(e),
        "Cusum Reverse": cusum(e, True),
        "Runs": runs(e),
        "Longest Runs": longest_run(e),
        "Approximate Entropy": apen(e, 10),
        "Serial 1": p1,
        "Serial 2": p2,
    }
    out = pathlib.Path(__file__).resolve().parent.parent / "data" / "nist_golden.json"
    out.write_text(json.dumps(golden, indent=1) + "\n")


if __name__ == "__main__":
    main()
