"""xoshiro256** seeded by four splitmix64 outputs; prints the first draws."""
M = (1 << 64) - 1


def splitmix64(s):
    s = (s + 0x9E3779B97F4A7C15) & M
    z = s
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & M
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & M
    return s, z ^ (z >> 31)


def rotl(x, k):
    return ((x << k) | (x >> (64 - k))) & M


def xoshiro(seed, n):
    st, s = [], seed
    for _ in range(4):
        s, z = splitmix64(s)
        st.append(z)
    out = []
    for _ in range(n):
        out.append((rotl((st[1] * 5) & M, 7) * 9) & M)
        t = (st[1] << 17) & M
        st[2] ^= st[0]
        st[3] ^= st[1]
        st[1] ^= st[2]
        st[0] ^= st[3]
        st[2] ^= t
        st[3] = rotl(st[3], 45)
    return out


if __name__ == "__main__":
    for seed in (0, 42):
        print(seed, [hex(v) for v in xoshiro(seed, 4)])
