# Copyright 2026 The qadc Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Regenerates the shipped model/strategy/state files and the classical
fixture. The fixture value is computed here by exhaustive summation over the
classical joint distribution, independently of the C++ code paths that the
tests compare against it.

Usage: python3 tools/generate_data.py [repo_root]
"""

import json
import math
import sys
from pathlib import Path


def matrix(rows, cols, entries):
    data = []
    for r in range(rows):
        for c in range(cols):
            z = complex(entries[r][c])
            data.append([z.real, z.imag])
    return {"rows": rows, "cols": cols, "data": data}


def identity_matrix(n):
    return matrix(n, n, [[1.0 if r == c else 0.0 for c in range(n)] for r in range(n)])


def reg(*subsystems):
    return [{"name": name, "dim": dim} for name, dim in subsystems]


def channel(input_reg, output_reg, kraus):
    return {"input": input_reg, "output": output_reg, "kraus": kraus}


def stochastic_kraus(transition, dout, din):
    kraus = []
    for o in range(dout):
        for i in range(din):
            p = transition[o][i]
            if p <= 0:
                continue
            k = [[0.0] * din for _ in range(dout)]
            k[o][i] = math.sqrt(p)
            kraus.append(matrix(dout, din, k))
    return kraus


def discard_env_kraus(s_dim, a_dim):
    kraus = []
    for s in range(s_dim):
        k = [[0.0] * (s_dim * a_dim) for _ in range(a_dim)]
        for a in range(a_dim):
            k[a][s * a_dim + a] = 1.0
        kraus.append(matrix(a_dim, s_dim * a_dim, k))
    return kraus


def diag_state(register, weights):
    n = len(weights)
    return {
        "register": register,
        "matrix": matrix(n, n, [[weights[r] if r == c else 0.0 for c in range(n)] for r in range(n)]),
    }


def model(name, description, action, comm):
    return {
        "metadata": {"name": name, "description": description},
        "action_channel": action,
        "comm_channel": comm,
    }


# ---------------------------------------------------------------------------
# Classical binary instance: every matrix diagonal.
# ---------------------------------------------------------------------------

S_GIVEN_G = 0.9
S0_GIVEN_S = 0.85
B_CORRECT = 0.9
A_FOLLOW = [0.8, 0.25]
G_ONE = [0.3, 0.6]
P_VU = [[0.3, 0.2], [0.25, 0.25]]


def classical_action_transition():
    t = [[0.0] * 2 for _ in range(4)]
    for g in range(2):
        for s in range(2):
            for s0 in range(2):
                ps = S_GIVEN_G if s == g else 1 - S_GIVEN_G
                ps0 = S0_GIVEN_S if s0 == s else 1 - S0_GIVEN_S
                t[s * 2 + s0][g] = ps * ps0
    return t


def classical_comm_transition():
    t = [[0.0] * 4 for _ in range(2)]
    for s in range(2):
        for a in range(2):
            for b in range(2):
                t[b][s * 2 + a] = B_CORRECT if b == (a ^ s) else 1 - B_CORRECT
    return t


def classical_rate():
    """I(VU;B) - I(V;S|U) by exhaustive summation."""
    p_vub = {}
    p_vus = {}
    for v in range(2):
        for u in range(2):
            for g in range(2):
                for s in range(2):
                    for s0 in range(2):
                        for a in range(2):
                            for b in range(2):
                                pg = G_ONE[u] if g == 1 else 1 - G_ONE[u]
                                ps = S_GIVEN_G if s == g else 1 - S_GIVEN_G
                                ps0 = S0_GIVEN_S if s0 == s else 1 - S0_GIVEN_S
                                pa = A_FOLLOW[v] if a == s0 else 1 - A_FOLLOW[v]
                                pb = B_CORRECT if b == (a ^ s) else 1 - B_CORRECT
                                p = P_VU[v][u] * pg * ps * ps0 * pa * pb
                                p_vub[(v, u, b)] = p_vub.get((v, u, b), 0.0) + p
                                p_vus[(v, u, s)] = p_vus.get((v, u, s), 0.0) + p

    def marg(table, positions):
        out = {}
        for key, p in table.items():
            sub = tuple(key[i] for i in positions)
            out[sub] = out.get(sub, 0.0) + p
        return out

    p_vu = marg(p_vub, (0, 1))
    p_b = marg(p_vub, (2,))
    p_u = marg(p_vub, (1,))
    p_us = marg(p_vus, (1, 2))

    i_vub = sum(
        p * math.log2(p / (p_vu[(v, u)] * p_b[(b,)]))
        for (v, u, b), p in p_vub.items()
        if p > 0
    )
    i_vs_u = sum(
        p * math.log2(p_u[(u,)] * p / (p_vu[(v, u)] * p_us[(u, s)]))
        for (v, u, s), p in p_vus.items()
        if p > 0
    )
    return i_vub, i_vs_u


def main():
    root = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent
    models = root / "data" / "models"
    strategies = root / "data" / "strategies"
    states = root / "data" / "states"
    fixtures = root / "tests" / "fixtures"
    for d in (models, strategies, states, fixtures):
        d.mkdir(parents=True, exist_ok=True)

    def dump(path, obj):
        path.write_text(json.dumps(obj, indent=1) + "\n")
        print(f"wrote {path}")

    g4 = reg(("G", 4))
    ss0 = reg(("S", 2), ("S0", 2))
    sa = reg(("S", 2), ("A", 2))
    b2 = reg(("B", 2))

    # Identity instance: the channel forwards A and ignores S; one bit is
    # achievable with orthogonal side-information states.
    dump(
        models / "identity_qubit.json",
        model(
            "identity_qubit",
            "Action register relabeled to (S, S0); the channel discards S and forwards A.",
            channel(g4, ss0, [identity_matrix(4)]),
            channel(sa, b2, discard_env_kraus(2, 2)),
        ),
    )

    # Completely depolarizing communication channel.
    depol_kraus = []
    for o in range(2):
        for i in range(4):
            k = [[0.0] * 4 for _ in range(2)]
            k[o][i] = 0.5 ** 0.5
            depol_kraus.append(matrix(2, 4, k))
    dump(
        models / "depolarizing_qubit.json",
        model(
            "depolarizing_qubit",
            "The channel output is maximally mixed regardless of the input.",
            channel(g4, ss0, [identity_matrix(4)]),
            channel(sa, b2, depol_kraus),
        ),
    )

    # Dephasing channel on the transmission, environment discarded.
    deph_kraus = []
    for z in range(2):
        for s in range(2):
            k = [[0.0] * 4 for _ in range(2)]
            for a in range(2):
                amp = 0.5 ** 0.5
                if z == 1 and a == 1:
                    amp = -amp
                k[a][s * 2 + a] = amp
            deph_kraus.append(matrix(2, 4, k))
    dump(
        models / "dephasing_qubit.json",
        model(
            "dephasing_qubit",
            "The channel discards S and fully dephases A in the computational basis.",
            channel(g4, ss0, [identity_matrix(4)]),
            channel(sa, b2, deph_kraus),
        ),
    )

    # Classical binary instance (all matrices diagonal).
    g2 = reg(("G", 2))
    dump(
        models / "classical_weissman.json",
        model(
            "classical_weissman",
            "All-diagonal binary instance; reduces to classical action-dependent coding.",
            channel(g2, ss0, stochastic_kraus(classical_action_transition(), 4, 2)),
            channel(sa, b2, stochastic_kraus(classical_comm_transition(), 2, 4)),
        ),
    )

    # Orthogonal-action design: eight actions, trivial environment,
    # noiseless forwarding.
    g8 = reg(("G", 8))
    s1s0 = reg(("S", 1), ("S0", 8))
    s1a = reg(("S", 1), ("A", 8))
    b8 = reg(("B", 8))
    dump(
        models / "orthogonal_actions.json",
        model(
            "orthogonal_actions",
            "Eight orthogonal action values forwarded noiselessly; the environment is trivial.",
            channel(g8, s1s0, [identity_matrix(8)]),
            channel(s1a, b8, [identity_matrix(8)]),
        ),
    )

    # Strategies.
    dump(
        strategies / "identity_qubit.json",
        {
            "p_vu": [[0.5, 0.5]],
            "action_states": [diag_state(g4, [1, 0, 0, 0]), diag_state(g4, [0, 1, 0, 0])],
            "encoders": [channel(reg(("S0", 2)), reg(("A", 2)), [identity_matrix(2)])],
        },
    )

    enc = []
    for v in range(2):
        t = [[A_FOLLOW[v] if a == s0 else 1 - A_FOLLOW[v] for s0 in range(2)] for a in range(2)]
        enc.append(channel(reg(("S0", 2)), reg(("A", 2)), stochastic_kraus(t, 2, 2)))
    dump(
        strategies / "classical_weissman.json",
        {
            "p_vu": P_VU,
            "action_states": [diag_state(g2, [1 - G_ONE[0], G_ONE[0]]), diag_state(g2, [1 - G_ONE[1], G_ONE[1]])],
            "encoders": enc,
        },
    )

    dump(
        strategies / "orthogonal_actions.json",
        {
            "p_vu": [[0.125] * 8],
            "action_states": [
                diag_state(g8, [1.0 if i == u else 0.0 for i in range(8)]) for u in range(8)
            ],
            "encoders": [channel(reg(("S0", 8)), reg(("A", 8)), [identity_matrix(8)])],
        },
    )

    # Bell state.
    amp = 0.5
    bell = [[0.0] * 4 for _ in range(4)]
    for r in (0, 3):
        for c in (0, 3):
            bell[r][c] = amp
    dump(states / "bell.json", {"register": reg(("A", 2), ("B", 2)), "matrix": matrix(4, 4, bell)})

    # Frozen classical fixture.
    i_vub, i_vs_u = classical_rate()
    dump(
        fixtures / "classical_weissman_expected.json",
        {
            "model": "classical_weissman",
            "i_vub": i_vub,
            "i_vs_given_u": i_vs_u,
            "r_low": i_vub - i_vs_u,
            "generator": "tools/generate_data.py (exhaustive summation)",
        },
    )


if __name__ == "__main__":
    main()
