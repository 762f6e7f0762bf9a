"""Relations for the non-balanced 4phi3 R^G_i(x; alpha, beta, gamma, delta, N, z).

Same layout as the A2 q-Racah entries: "plus" expands the original function
over the shifted one with offsets {0, -1}; GIII is a "minus" form with the
shifted function on the left at x - 1.
"""

_DEN = "(1 - alpha*beta*q^(2*i + 1))"

G_ENTRIES = [
    {
        "id": "GI",
        "shift": {"eta": 0, "N_bar": "N-1", "map": {"beta": "q*beta", "gamma": "gamma/q"}},
        "plus": {"lam": "1", "coeffs": {
            "0": f"(1 - alpha*beta*q^(i + 1))*(q^i - q^N)/((1 - q^N)*{_DEN})",
            "-1": f"(1 - alpha*beta*q^(N + i + 1))*(1 - q^i)/((1 - q^N)*{_DEN})",
        }},
    },
    {
        "id": "GII",
        "shift": {"eta": 0, "N_bar": "N", "map": {"beta": "q*beta", "delta": "q*delta"}},
        "plus": {"lam": "1", "coeffs": {
            "0": f"(1 - delta*q^i)*(1 - alpha*beta*q^(i + 1))/((1 - delta)*{_DEN})",
            "-1": f"-(1 - q^i)*(delta - alpha*beta*q^(i + 1))/((1 - delta)*{_DEN})",
        }},
    },
    {
        "id": "GIII",
        "shift": {"eta": -1, "N_bar": "N-1", "map": {"alpha": "q*alpha", "gamma": "q*gamma", "delta": "q*delta"}},
        "minus": {"lam": "(1 - q^(-x))*(1 - gamma*q^(x - N))", "coeffs": {
            "1": "q^(i - N + 1)*(1 - alpha*q)*(1 - delta)*(1 - q^N)/(z*(1 - alpha*beta*q^(2*i + 2)))",
            "0": "-ref('1')",
        }},
    },
    {
        "id": "GIV",
        "shift": {"eta": 0, "N_bar": "N", "map": {"alpha": "q*alpha"}},
        "plus": {"lam": "1", "coeffs": {
            "0": f"(1 - alpha*q^(i + 1))*(1 - alpha*beta*q^(i + 1))/((1 - alpha*q)*{_DEN})",
            "-1": f"-alpha*q*(1 - beta*q^i)*(1 - q^i)/((1 - alpha*q)*{_DEN})",
        }},
    },
    {
        "id": "GV",
        "shift": {"eta": 0, "N_bar": "N", "map": {"beta": "q*beta"}},
        "plus": {"lam": "1", "coeffs": {
            "0": f"(1 - alpha*beta*q^(i + 1))/{_DEN}",
            "-1": f"alpha*beta*q^(i + 1)*(1 - q^i)/{_DEN}",
        }},
    },
    {
        "id": "GVI",
        "shift": {"eta": 0, "N_bar": "N", "map": {"beta": "q*beta", "z": "z/q"}},
        "plus": {"lam": "1", "coeffs": {
            "0": f"q^i*(1 - alpha*beta*q^(i + 1))/{_DEN}",
            "-1": f"(1 - q^i)/{_DEN}",
        }},
    },
]

CATALOG = [("G", "G", G_ENTRIES)]
