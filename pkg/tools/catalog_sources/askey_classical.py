"""A2 relations of the classical families.

Variables: alpha, beta, gamma, N, i, x.
"""

R = [
    dict(
        id="RI",
        shift=dict(eta=0, N_bar="N-1", map={"beta": "beta+1", "gamma": "gamma-1"}),
        plus=dict(lam="1", coeffs={"0": "(i + 1 + alpha + beta)*(N - i) / ((2*i + 1 + alpha + beta)*N)",
                                   "-1": "(i + 1 + alpha + beta + N)*i / ((2*i + 1 + alpha + beta)*N)"}),
        minus=dict(lam="(x + gamma)*(x - N) / N",
                   coeffs={"0": "(i + 1 + beta)*(i + 1 + alpha - gamma) / (2*i + 2 + alpha + beta)",
                           "1": "-(i + beta + gamma + 1)*(i + alpha + 1) / (2*i + 2 + alpha + beta)"}),
    ),
    dict(
        id="RII",
        shift=dict(eta=0, N_bar="N", map={"beta": "beta+1"}),
        plus=dict(lam="1", coeffs={
            "0": "(i + 1 + alpha + beta)*(i + 1 + beta + gamma) / ((2*i + 1 + alpha + beta)*(1 + beta + gamma))",
            "-1": "-i*(i + alpha - gamma) / ((2*i + 1 + alpha + beta)*(1 + beta + gamma))"}),
        minus=dict(lam="(x + beta + gamma + 1)*(N + beta - x + 1) / (1 + beta + gamma)",
                   coeffs={"0": "(i + 2 + alpha + beta + N)*(i + 1 + beta) / (2*i + 2 + alpha + beta)",
                           "1": "(N - i)*(i + 1 + alpha) / (2*i + 2 + alpha + beta)"}),
    ),
    dict(
        id="RIII",
        shift=dict(eta=-1, N_bar="N-1", map={"alpha": "alpha+1", "gamma": "gamma+1"}),
        plus=dict(lam="1", coeffs={
            "0": "(i + 1 + alpha + beta)*(i + 1 + alpha)*(N - i)*(i + 1 + beta + gamma)"
                 " / ((2*i + 1 + alpha + beta)*(1 + alpha)*(1 + beta + gamma)*N)",
            "-1": "i*(i + beta)*(i + alpha - gamma)*(i + 1 + alpha + beta + N)"
                  " / ((2*i + 1 + alpha + beta)*(1 + alpha)*(1 + beta + gamma)*N)"}),
        minus=dict(lam="x*(x + gamma - N) / ((1 + alpha)*(1 + beta + gamma)*N)",
                   coeffs={"0": "1 / (2*i + 2 + alpha + beta)", "1": "-1 / (2*i + 2 + alpha + beta)"}),
    ),
    dict(
        id="RIV",
        shift=dict(eta=0, N_bar="N", map={"alpha": "alpha+1"}),
        plus=dict(lam="1", coeffs={"0": "(i + 1 + alpha + beta)*(i + 1 + alpha) / ((1 + alpha)*(2*i + 1 + alpha + beta))",
                                   "-1": "-i*(i + beta) / ((1 + alpha)*(2*i + 1 + alpha + beta))"}),
        minus=dict(lam="(x + 1 + alpha)*(N + alpha - gamma - x + 1) / (1 + alpha)",
                   coeffs={"0": "(i + 2 + alpha + beta + N)*(i + 1 + alpha - gamma) / (2*i + 2 + alpha + beta)",
                           "1": "(i + 1 + beta + gamma)*(N - i) / (2*i + 2 + alpha + beta)"}),
    ),
]

H = [
    dict(
        id="HI",
        shift=dict(eta=0, N_bar="N", map={"alpha": "alpha+1"}),
        plus=dict(lam="1", coeffs={"0": "(i + 1 + alpha)*(i + 1 + alpha + beta) / ((1 + alpha)*(2*i + 1 + alpha + beta))",
                                   "-1": "-i*(i + beta) / ((1 + alpha)*(2*i + 1 + alpha + beta))"}),
        minus=dict(lam="(x + 1 + alpha) / (1 + alpha)",
                   coeffs={"0": "(i + 2 + alpha + beta + N) / (2*i + 2 + alpha + beta)",
                           "1": "(i - N) / (2*i + 2 + alpha + beta)"}),
    ),
    dict(
        id="HII",
        shift=dict(eta=-1, N_bar="N-1", map={"alpha": "alpha+1"}),
        plus=dict(lam="1", coeffs={
            "0": "(i + 1 + alpha)*(i + 1 + alpha + beta)*(N - i) / ((2*i + 1 + alpha + beta)*(1 + alpha)*N)",
            "-1": "-i*(i + 1 + alpha + beta + N)*(i + beta) / ((2*i + 1 + alpha + beta)*(1 + alpha)*N)"}),
        minus=dict(lam="-x", coeffs={"0": "-(1 + alpha)*N / (2*i + 2 + alpha + beta)",
                                     "1": "(1 + alpha)*N / (2*i + 2 + alpha + beta)"}),
    ),
    dict(
        id="HIII",
        shift=dict(eta=0, N_bar="N", map={"beta": "beta+1"}),
        plus=dict(lam="1", coeffs={"0": "(i + 1 + alpha + beta) / (2*i + 1 + alpha + beta)",
                                   "-1": "i / (2*i + 1 + alpha + beta)"}),
        minus=dict(lam="N + beta - x + 1",
                   coeffs={"0": "(i + 2 + alpha + beta + N)*(i + 1 + beta) / (2*i + 2 + alpha + beta)",
                           "1": "(N - i)*(i + 1 + alpha) / (2*i + 2 + alpha + beta)"}),
    ),
    dict(
        id="HIV",
        shift=dict(eta=0, N_bar="N-1", map={"beta": "beta+1"}),
        plus=dict(lam="1", coeffs={"0": "(i + 1 + alpha + beta)*(N - i) / ((2*i + 1 + alpha + beta)*N)",
                                   "-1": "i*(i + 1 + alpha + beta + N) / ((2*i + 1 + alpha + beta)*N)"}),
        minus=dict(lam="N - x", coeffs={"0": "N*(i + 1 + beta) / (2*i + 2 + alpha + beta)",
                                        "1": "N*(i + 1 + alpha) / (2*i + 2 + alpha + beta)"}),
    ),
]

DH = [
    dict(
        id="dHI",
        shift=dict(eta=-1, N_bar="N-1", map={"alpha": "alpha+1", "beta": "beta+1"}),
        plus=dict(lam="1", coeffs={"0": "(i + 1 + alpha)*(N - i) / (N*(1 + alpha))",
                                   "-1": "i*(i - 1 - beta - N) / (N*(1 + alpha))"}),
        minus=dict(lam="x*(x + alpha + beta + 1) / ((1 + alpha)*N)", coeffs={"0": "1", "1": "-1"}),
    ),
    dict(
        id="dHII",
        shift=dict(eta=0, N_bar="N-1", map={}),
        plus=dict(lam="1", coeffs={"0": "(N - i) / N", "-1": "i / N"}),
        minus=dict(lam="(N - x)*(x + 1 + alpha + beta + N) / N", coeffs={"0": "beta + N - i", "1": "i + alpha + 1"}),
    ),
    dict(
        id="dHIII",
        shift=dict(eta=0, N_bar="N", map={"alpha": "alpha+1", "beta": "beta-1"}),
        plus=dict(lam="1", coeffs={"0": "(i + 1 + alpha) / (1 + alpha)", "-1": "-i / (1 + alpha)"}),
        minus=dict(lam="-(x + 1 + alpha)*(x + beta) / (1 + alpha)", coeffs={"0": "i - beta - N", "1": "N - i"}),
    ),
]

K = [
    dict(
        id="KI",
        shift=dict(eta=0, N_bar="N-1", map={}),
        plus=dict(lam="1", coeffs={"0": "(N - i) / N", "-1": "i / N"}),
        minus=dict(lam="(N - x) / N", coeffs={"0": "1 - alpha", "1": "alpha"}),
    ),
    dict(
        id="KII",
        shift=dict(eta=-1, N_bar="N-1", map={}),
        plus=dict(lam="1", coeffs={"0": "(N - i) / N", "-1": "(alpha - 1)*i / (alpha*N)"}),
        minus=dict(lam="x", coeffs={"0": "alpha*N", "1": "-alpha*N"}),
    ),
]

R_SPECTRAL = {
    "RI": dict(
        nu_point="N",
        chi="ref('weight', N) / (N*gamma)",
        measure=dict(mass="ref('weight', N) / (N*gamma)", factor="1 / (N*gamma)"),
    ),
    "RII": dict(
        nu_point="beta + N + 1",
        chi="0",
        measure=dict(mass="0", factor="1 / ((beta + N + 1)*(beta + gamma + 1))"),
    ),
    "RIII": dict(
        nu_point="0",
        chi="(gamma + 1)*(beta + N)*(alpha + N - gamma)"
            " / ((beta + gamma + 1)*(alpha + 1)*(N - 2 - gamma)*(N - gamma - 1)*N)",
    ),
    "RIV": dict(nu_point="-alpha - 1", chi="0"),
}
for _entry in R:
    _entry.update(R_SPECTRAL[_entry["id"]])

CATALOG = [("R", "A2", R), ("H", "A2", H), ("dH", "A2", DH), ("K", "A2", K)]

CORRESPONDENCE = {
    "R": {"qRI": "RI", "qRII": "RII", "qRIII": "RIII", "qRIV": "RIV"},
    "H": {"qHI": "HI", "qHII": "HII", "qHIII": "HIII", "qHIV": "HIV"},
    "dH": {"dqHI": "dHI", "dqHII": "dHII", "dqHIII": "dHIII"},
    "K": {"qqKI": "trivial", "qqKII": "KI", "qqKIII": "KII", "qKI": "trivial", "qKII": "KI", "qKIII": "KII",
          "aqKI": "trivial", "aqKII": "KI", "aqKIII": "KII", "dqKI": "KI", "dqKII": "KII"},
}
