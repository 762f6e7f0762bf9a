"""A2 relations of the q-families, written as infix formulas.

Variables: alpha, beta, gamma, q, N, i, x.  ``^`` is a power.
"""

QR = [
    dict(
        id="qRI",
        shift=dict(eta=0, N_bar="N-1", map={"beta": "q*beta", "gamma": "gamma/q"}),
        plus=dict(
            lam="1",
            coeffs={
                "0": "(1 - q^(i-N))*(1 - alpha*beta*q^(i+1)) / ((1 - q^(-N))*(1 - alpha*beta*q^(2*i+1)))",
                "-1": "(1 - q^i)*(1 - alpha*beta*q^(N+i+1)) / ((1 - q^N)*(1 - alpha*beta*q^(2*i+1)))",
            },
        ),
        minus=dict(
            lam="(1 - gamma*q^x)*(1 - q^(N-x)) / (1 - q^N)",
            coeffs={
                "0": "(1 - beta*q^(i+1))*(alpha*q^(i+1) - gamma) / (1 - alpha*beta*q^(2*i+2))",
                "1": "(1 - alpha*q^(i+1))*(1 - beta*gamma*q^(i+1)) / (1 - alpha*beta*q^(2*i+2))",
            },
        ),
    ),
    dict(
        id="qRII",
        shift=dict(eta=0, N_bar="N", map={"beta": "q*beta"}),
        plus=dict(
            lam="1",
            coeffs={
                "0": "(1 - alpha*beta*q^(i+1))*(1 - beta*gamma*q^(i+1)) / ((1 - beta*gamma*q)*(1 - alpha*beta*q^(2*i+1)))",
                "-1": "-beta*q*(1 - q^i)*(gamma - alpha*q^i) / ((1 - beta*gamma*q)*(1 - alpha*beta*q^(2*i+1)))",
            },
        ),
        minus=dict(
            lam="(1 - beta*gamma*q^(x+1))*(1 - beta*q^(N+1-x)) / (beta*q*(1 - beta*gamma*q))",
            coeffs={
                "0": "(1 - beta*q^(i+1))*(1 - alpha*beta*q^(N+i+2)) / (beta*q*(1 - alpha*beta*q^(2*i+2)))",
                "1": "(q^i - q^N)*(1 - alpha*q^(i+1)) / (1 - alpha*beta*q^(2*i+2))",
            },
        ),
    ),
    dict(
        id="qRIII",
        shift=dict(eta=-1, N_bar="N-1", map={"alpha": "q*alpha", "gamma": "q*gamma"}),
        plus=dict(
            lam="1",
            coeffs={
                "0": "(1 - q^(N-i))*(1 - alpha*q^(i+1))*(1 - alpha*beta*q^(i+1))*(1 - beta*gamma*q^(i+1))"
                     " / ((1 - q^N)*(1 - alpha*q)*(1 - beta*gamma*q)*(1 - alpha*beta*q^(2*i+1)))",
                "-1": "(1 - q^i)*(gamma*q^(1-i) - alpha*q)*(1 - beta*q^i)*(1 - alpha*beta*q^(N+i+1))"
                      " / ((1 - q^N)*(1 - alpha*q)*(1 - beta*gamma*q)*(1 - alpha*beta*q^(2*i+1)))",
            },
        ),
        minus=dict(
            lam="(1 - q^(-x))*(1 - gamma*q^(x-N)) / ((1 - beta*gamma*q)*(1 - alpha*q)*(1 - q^N))",
            coeffs={
                "0": "-q^(i-N) / (1 - alpha*beta*q^(2*i+2))",
                "1": "q^(i-N) / (1 - alpha*beta*q^(2*i+2))",
            },
        ),
    ),
    dict(
        id="qRIV",
        shift=dict(eta=0, N_bar="N", map={"alpha": "q*alpha"}),
        plus=dict(
            lam="1",
            coeffs={
                "0": "(1 - alpha*q^(i+1))*(1 - alpha*beta*q^(i+1)) / ((1 - alpha*q)*(1 - alpha*beta*q^(2*i+1)))",
                "-1": "-q*alpha*(1 - q^i)*(1 - beta*q^i) / ((1 - alpha*q)*(1 - alpha*beta*q^(2*i+1)))",
            },
        ),
        minus=dict(
            lam="(1 - alpha*q^(x+1))*(gamma - alpha*q^(N+1-x)) / (alpha*q*(1 - alpha*q))",
            coeffs={
                "0": "(1 - alpha*beta*q^(N+i+2))*(gamma - alpha*q^(i+1)) / (alpha*q*(1 - alpha*beta*q^(2*i+2)))",
                "1": "-(q^N - q^i)*(1 - beta*gamma*q^(i+1)) / (1 - alpha*beta*q^(2*i+2))",
            },
        ),
    ),
]

QH = [
    dict(
        id="qHI",
        shift=dict(eta=0, N_bar="N", map={"alpha": "q*alpha"}),
        plus=dict(
            lam="1",
            coeffs={
                "0": "(1 - alpha*q^(i+1))*(1 - alpha*beta*q^(i+1)) / ((1 - alpha*q)*(1 - alpha*beta*q^(2*i+1)))",
                "-1": "-alpha*q*(1 - q^i)*(1 - beta*q^i) / ((1 - alpha*q)*(1 - alpha*beta*q^(2*i+1)))",
            },
        ),
        minus=dict(
            lam="q^N*(alpha*q - q^(-x)) / (1 - alpha*q)",
            coeffs={
                "0": "-q^i*(1 - alpha*beta*q^(N+i+2)) / (1 - alpha*beta*q^(2*i+2))",
                "1": "(q^i - q^N) / (1 - alpha*beta*q^(2*i+2))",
            },
        ),
    ),
    dict(
        id="qHII",
        shift=dict(eta=-1, N_bar="N-1", map={"alpha": "q*alpha"}),
        plus=dict(
            lam="1",
            coeffs={
                "0": "(1 - q^(N-i))*(1 - alpha*beta*q^(i+1))*(1 - alpha*q^(i+1))"
                     " / ((1 - q^N)*(1 - alpha*beta*q^(2*i+1))*(1 - alpha*q))",
                "-1": "-alpha*q*(1 - q^i)*(1 - alpha*beta*q^(N+i+1))*(1 - beta*q^i)"
                      " / ((1 - q^N)*(1 - alpha*beta*q^(2*i+1))*(1 - alpha*q))",
            },
        ),
        minus=dict(
            lam="(1 - q^(-x)) / ((1 - q^N)*(1 - alpha*q))",
            coeffs={
                "0": "-q^(i-N) / (1 - alpha*beta*q^(2*i+2))",
                "1": "q^(i-N) / (1 - alpha*beta*q^(2*i+2))",
            },
        ),
    ),
    dict(
        id="qHIII",
        shift=dict(eta=0, N_bar="N", map={"beta": "q*beta"}),
        plus=dict(
            lam="1",
            coeffs={
                "0": "(1 - alpha*beta*q^(i+1)) / (1 - alpha*beta*q^(2*i+1))",
                "-1": "alpha*beta*q^(i+1)*(1 - q^i) / (1 - alpha*beta*q^(2*i+1))",
            },
        ),
        minus=dict(
            lam="(1 - beta*q^(N+1-x)) / (beta*q)",
            coeffs={
                "0": "(1 - beta*q^(i+1))*(1 - alpha*beta*q^(N+i+2)) / (beta*q*(1 - alpha*beta*q^(2*i+2)))",
                "1": "(q^i - q^N)*(1 - alpha*q^(i+1)) / (1 - alpha*beta*q^(2*i+2))",
            },
        ),
    ),
    dict(
        id="qHIV",
        shift=dict(eta=0, N_bar="N-1", map={"beta": "q*beta"}),
        plus=dict(
            lam="1",
            coeffs={
                "0": "(1 - q^(i-N))*(1 - alpha*beta*q^(i+1)) / ((1 - q^(-N))*(1 - alpha*beta*q^(2*i+1)))",
                "-1": "(1 - q^i)*(1 - alpha*beta*q^(N+i+1)) / ((1 - q^N)*(1 - alpha*beta*q^(2*i+1)))",
            },
        ),
        minus=dict(
            lam="(1 - q^(N-x)) / (1 - q^N)",
            coeffs={
                "0": "alpha*q^(i+1)*(1 - beta*q^(i+1)) / (1 - alpha*beta*q^(2*i+2))",
                "1": "(1 - alpha*q^(i+1)) / (1 - alpha*beta*q^(2*i+2))",
            },
        ),
    ),
]

DQH = [
    dict(
        id="dqHI",
        shift=dict(eta=-1, N_bar="N-1", map={"alpha": "q*alpha", "beta": "q*beta"}),
        plus=dict(
            lam="1",
            coeffs={
                "0": "(1 - q^(N-i))*(1 - alpha*q^(i+1)) / ((1 - q^N)*(1 - alpha*q))",
                "-1": "-alpha*q*(1 - q^i)*(1 - beta*q^(N-i+1)) / ((1 - q^N)*(1 - alpha*q))",
            },
        ),
        minus=dict(
            lam="(1 - q^(-x))*(1 - alpha*beta*q^(x+1)) / ((1 - alpha*q)*(1 - q^N))",
            coeffs={"0": "-q^(i-N)", "1": "q^(i-N)"},
        ),
    ),
    dict(
        id="dqHII",
        shift=dict(eta=0, N_bar="N-1", map={}),
        plus=dict(
            lam="1",
            coeffs={"0": "(q^i - q^N) / (1 - q^N)", "-1": "(1 - q^i) / (1 - q^N)"},
        ),
        minus=dict(
            lam="(1 - q^(N-x))*(1 - alpha*beta*q^(x+N+1)) / (1 - q^N)",
            coeffs={"0": "alpha*q*(q^i - beta*q^N)", "1": "1 - alpha*q^(i+1)"},
        ),
    ),
    dict(
        id="dqHIII",
        shift=dict(eta=0, N_bar="N", map={"alpha": "q*alpha", "beta": "beta/q"}),
        plus=dict(
            lam="1",
            coeffs={"0": "(1 - alpha*q^(i+1)) / (1 - alpha*q)", "-1": "-alpha*q*(1 - q^i) / (1 - alpha*q)"},
        ),
        minus=dict(
            lam="(q^(-x) - beta)*(1 - alpha*q^(x+1)) / (1 - alpha*q)",
            coeffs={"0": "q^(i-N) - beta", "1": "1 - q^(i-N)"},
        ),
    ),
]

QQK = [
    dict(
        id="qqKI",
        shift=dict(eta=0, N_bar="N", map={"alpha": "q*alpha"}),
        plus=dict(lam="1", coeffs={"0": "q^(-i)", "-1": "1 - q^(-i)"}),
        minus=dict(lam="q^(-N) - alpha*q^(1-x)", coeffs={"0": "q^(-i) - alpha*q", "1": "q^(-N) - q^(-i)"}),
    ),
    dict(
        id="qqKII",
        shift=dict(eta=0, N_bar="N-1", map={"alpha": "q*alpha"}),
        plus=dict(lam="1", coeffs={"0": "(1 - q^(N-i)) / (1 - q^N)", "-1": "(1 - q^(-i)) / (1 - q^(-N))"}),
        minus=dict(lam="alpha*q*(1 - q^(N-x)) / (1 - q^N)", coeffs={"0": "alpha*q - q^(-i)", "1": "q^(-i)"}),
    ),
    dict(
        id="qqKIII",
        shift=dict(eta=-1, N_bar="N-1", map={}),
        plus=dict(lam="1 - q^N", coeffs={"0": "1 - q^(N-i)", "-1": "-q^N*(1 - q^(-i))*(1 - alpha*q^i)"}),
        minus=dict(lam="alpha*q^(N+1)*(1 - q^(-x)) / (1 - q^N)", coeffs={"0": "-q^(-i)", "1": "q^(-i)"}),
    ),
]

QK = [
    dict(
        id="qKI",
        shift=dict(eta=0, N_bar="N", map={"alpha": "q*alpha"}),
        plus=dict(lam="1", coeffs={"0": "(1 - alpha*q^i) / (1 - alpha*q^(2*i))",
                                   "-1": "alpha*q^i*(1 - q^i) / (1 - alpha*q^(2*i))"}),
        minus=dict(lam="q^(N-x)", coeffs={"0": "q^i*(1 - alpha*q^(N+i+1)) / (1 - alpha*q^(2*i+1))",
                                          "1": "(q^N - q^i) / (1 - alpha*q^(2*i+1))"}),
    ),
    dict(
        id="qKII",
        shift=dict(eta=0, N_bar="N-1", map={"alpha": "q*alpha"}),
        plus=dict(lam="1", coeffs={"0": "(1 - q^(i-N))*(1 - alpha*q^i) / ((1 - alpha*q^(2*i))*(1 - q^(-N)))",
                                   "-1": "(1 - q^i)*(1 - alpha*q^(N+i)) / ((1 - alpha*q^(2*i))*(1 - q^N))"}),
        minus=dict(lam="(1 - q^(N-x)) / (1 - q^N)", coeffs={"0": "-alpha*q^(2*i+1) / (1 - alpha*q^(2*i+1))",
                                                           "1": "1 / (1 - alpha*q^(2*i+1))"}),
    ),
    dict(
        id="qKIII",
        shift=dict(eta=-1, N_bar="N-1", map={"alpha": "q*alpha"}),
        plus=dict(lam="1", coeffs={"0": "(1 - q^(N-i))*(1 - alpha*q^i) / ((1 - alpha*q^(2*i))*(1 - q^N))",
                                   "-1": "alpha*q^i*(1 - alpha*q^(i+N))*(1 - q^i) / ((1 - alpha*q^(2*i))*(1 - q^N))"}),
        minus=dict(lam="(1 - q^(-x)) / (1 - q^N)", coeffs={"0": "-q^(i-N) / (1 - alpha*q^(2*i+1))",
                                                          "1": "q^(i-N) / (1 - alpha*q^(2*i+1))"}),
    ),
]

AQK = [
    dict(
        id="aqKI",
        shift=dict(eta=0, N_bar="N", map={"alpha": "q*alpha"}),
        plus=dict(lam="1", coeffs={"0": "(1 - alpha*q^(i+1)) / (1 - alpha*q)", "-1": "-alpha*q*(1 - q^i) / (1 - alpha*q)"}),
        minus=dict(lam="q^N*(alpha*q - q^(-x)) / (1 - alpha*q)", coeffs={"0": "-q^i", "1": "q^i - q^N"}),
    ),
    dict(
        id="aqKII",
        shift=dict(eta=0, N_bar="N-1", map={}),
        plus=dict(lam="1", coeffs={"0": "(1 - q^(i-N)) / (1 - q^(-N))", "-1": "(1 - q^i) / (1 - q^N)"}),
        minus=dict(lam="(1 - q^(N-x)) / (1 - q^N)", coeffs={"0": "alpha*q^(i+1)", "1": "1 - alpha*q^(i+1)"}),
    ),
    dict(
        id="aqKIII",
        shift=dict(eta=-1, N_bar="N-1", map={"alpha": "q*alpha"}),
        plus=dict(lam="1", coeffs={"0": "(1 - q^(N-i))*(1 - alpha*q^(i+1)) / ((1 - q^N)*(1 - alpha*q))",
                                   "-1": "-alpha*q*(1 - q^i) / ((1 - q^N)*(1 - alpha*q))"}),
        minus=dict(lam="(1 - q^(-x)) / ((1 - q^N)*(1 - alpha*q))", coeffs={"0": "-q^(i-N)", "1": "q^(i-N)"}),
    ),
]

DQK = [
    dict(
        id="dqKI",
        shift=dict(eta=0, N_bar="N-1", map={}),
        plus=dict(lam="1", coeffs={"0": "(1 - q^(i-N)) / (1 - q^(-N))", "-1": "(1 - q^i) / (1 - q^N)"}),
        minus=dict(lam="(1 - q^(N-x))*(1 - alpha*q^(x+N)) / (1 - q^N)", coeffs={"0": "-alpha*q^N", "1": "1"}),
    ),
    dict(
        id="dqKII",
        shift=dict(eta=-1, N_bar="N-1", map={"alpha": "q^2*alpha"}),
        plus=dict(lam="1", coeffs={"0": "(1 - q^(N-i)) / (1 - q^N)", "-1": "-alpha*q^(N+1)*(1 - q^(-i)) / (1 - q^N)"}),
        minus=dict(lam="(1 - q^(-x))*(1 - alpha*q^x) / (1 - q^(-N))", coeffs={"0": "q^i", "1": "-q^i"}),
    ),
]

# spectral point of the Christoffel/Geronimus transform (the lattice value q^nu), the
# Geronimus parameter chi, and the displayed finite-measure identities
QR_SPECTRAL = {
    "qRI": dict(
        nu_point="q^N",
        chi="ref('weight', N) / ((1 - gamma)*(1 - q^(-N)))",
        measure=dict(mass="ref('weight', N) / ((gamma - 1)*(1 - q^(-N)))",
                     factor="1 / ((gamma - 1)*(1 - q^(-N)))"),
    ),
    "qRII": dict(
        nu_point="beta*q^(N+1)",
        chi="0",
        measure=dict(mass="0", factor="1 / ((beta*gamma*q - 1)*(1 - q^(-N-1)/beta))"),
    ),
    "qRIII": dict(
        nu_point="1",
        chi="(1 - q^(-N)/beta)*(1 - gamma*q)*(1 - gamma*q^(-N))*(1 - gamma*q^(-N)/alpha)*alpha*beta*q^2"
            " / ((1 - alpha*q)*(1 - beta*gamma*q)*(1 - q^(-N))*(1 - gamma*q^(1-N))*(1 - gamma*q^(2-N)))",
    ),
    "qRIV": dict(nu_point="1 / (alpha*q)", chi="0"),
}
for _entry in QR:
    _entry.update(QR_SPECTRAL[_entry["id"]])

CATALOG = [
    ("qR", "A2", QR), ("qH", "A2", QH), ("dqH", "A2", DQH), ("qqK", "A2", QQK),
    ("qK", "A2", QK), ("aqK", "A2", AQK), ("dqK", "A2", DQK),
]

# images of each relation under the limits relating the families
CORRESPONDENCE = {
    "qH": {"qRI": "qHIV", "qRII": "qHIII", "qRIII": "qHII", "qRIV": "qHI"},
    "dqH": {"qRI": "dqHII", "qRII": "trivial", "qRIII": "dqHI", "qRIV": "dqHIII"},
    "qqK": {"qRI": "qqKII", "qRII": "qqKI", "qRIII": "qqKIII", "qRIV": "trivial"},
    "qK": {"qRI": "qKII", "qRII": "qKI", "qRIII": "qKIII", "qRIV": "qKI"},
    "aqK": {"qRI": "aqKII", "qRII": "trivial", "qRIII": "aqKIII", "qRIV": "aqKI"},
    "dqK": {"qRI": "dqKI", "qRII": "trivial", "qRIII": "dqKII", "qRIV": "trivial"},
}
