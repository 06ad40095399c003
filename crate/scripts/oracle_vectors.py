#!/usr/bin/env python3
"""Independent reference vectors for Poseidon and Baby Jubjub EdDSA.

Pure-Python integer arithmetic; shares nothing with the Rust crate except the
parameter procedure in gen_poseidon_params.py. Writes JSON to stdout.

Usage: scripts/oracle_vectors.py > crates/core/tests/data/reference_vectors.json
"""

import hashlib
import json
import random

from gen_poseidon_params import P, hash_inputs

A = 168700
D = 168696
ORDER = 2736030358979909402780800718157159386076813972158567259200215660948447373041
BASE = (
    5299619240641551281634865583518297030282874472190772894086521144482721001553,
    16950150798460657717958625567821834550301663161624707787222815936182638968203,
)


def inv(x):
    return pow(x, P - 2, P)


def on_curve(pt):
    x, y = pt
    return (A * x * x + y * y - 1 - D * x * x * y * y) % P == 0


def add(p1, p2):
    x1, y1 = p1
    x2, y2 = p2
    t = D * x1 * x2 * y1 * y2 % P
    x3 = (x1 * y2 + y1 * x2) * inv((1 + t) % P) % P
    y3 = (y1 * y2 - A * x1 * x2) * inv((1 - t) % P) % P
    return (x3, y3)


def mul(k, pt):
    acc = (0, 1)
    while k:
        if k & 1:
            acc = add(acc, pt)
        pt = add(pt, pt)
        k >>= 1
    return acc


def le32(v):
    return v.to_bytes(32, "little")


def keygen(seed):
    h = hashlib.sha512(seed).digest()
    sk = int.from_bytes(h[:32], "little") % (ORDER - 1) + 1
    prefix = h[32:]
    return sk, prefix, mul(sk, BASE)


def challenge(r, pk, msg):
    inner = hash_inputs([r[0], r[1], pk[0], pk[1]])
    return hash_inputs([inner, msg])


def sign(sk, prefix, pk, msg):
    nonce = int.from_bytes(hashlib.sha512(prefix + le32(msg)).digest(), "little") % ORDER
    r = mul(nonce, BASE)
    k = challenge(r, pk, msg)
    s = (nonce + k * sk) % ORDER
    return r, s


def verify(pk, msg, sig):
    r, s = sig
    k = challenge(r, pk, msg)
    return mul(s, BASE) == add(r, mul(k, pk))


def main():
    assert on_curve(BASE)
    assert mul(ORDER, BASE) == (0, 1)
    rng = random.Random(20201115)

    poseidon = []
    for arity in range(1, 5):
        fixed = [[0] * arity, list(range(1, arity + 1)), [P - 1] * arity]
        for inputs in fixed + [[rng.randrange(P) for _ in range(arity)] for _ in range(9)]:
            poseidon.append({"inputs": [str(v) for v in inputs], "digest": str(hash_inputs(inputs))})

    eddsa = []
    for i in range(12):
        seed = hashlib.sha256(b"sans-oracle-seed-%d" % i).digest()
        sk, prefix, pk = keygen(seed)
        token = rng.randrange(2**248)
        t_exp = 1600000000 + 86400 * rng.randrange(1000)
        t_exp -= t_exp % 86400
        msg = hash_inputs([token, t_exp])
        r, s = sign(sk, prefix, pk, msg)
        assert verify(pk, msg, (r, s))
        eddsa.append({
            "seed": seed.hex(),
            "sk": str(sk),
            "pk": [str(pk[0]), str(pk[1])],
            "token": str(token),
            "t_exp": t_exp,
            "msg": str(msg),
            "r": [str(r[0]), str(r[1])],
            "s": str(s),
            "challenge_c": 26537074 + i,
            "out": str(hash_inputs([26537074 + i, token])),
        })

    print(json.dumps({"poseidon": poseidon, "eddsa": eddsa}, indent=1))


if __name__ == "__main__":
    main()
