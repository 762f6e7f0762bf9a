"""Relations between Bannai-Ito (BI) and complementary Bannai-Ito (CBI) polynomials.

Each entry links its own family to the partner family with parameters given by
``shift["bar"]`` (expressions in alpha, beta, gamma, N) and N parity fixed by
``shift["parity"]``.  Per-degree constants live in ``defs``; a def given as a
dict is split on the parity of i.  Names available in formulas: alpha, beta,
gamma, N, Ne, Np, i, ie, ip, x.

plus:  P_i(x; own) = z0 * Q_i(x + eta; bar) + zm / d * Q_{i-1}(x + eta; bar)
minus: m(x) * Q_i(x + eta; bar) = w0 / (i + 1 + alpha + beta) * P_i(x; own) + wp * P_{i+1}(x; own)

with d = i + alpha + beta for BI entries and i + 1 + alpha + beta for CBI
entries, and the multiplier m(x) stored as the minus "lam".
"""

B_FORMS = {
    "plus": {"lam": "1", "coeffs": {"0": "ref('z0')", "-1": "ref('zm')/(i + alpha + beta)"}},
    "minus": {
        "lam": "(x*(-1)^x + (-1)^x*(gamma - Ne - 1/2) + ref('omega'))/2",
        "coeffs": {"1": "ref('wp')", "0": "ref('w0')/(i + 1 + alpha + beta)"},
    },
}

I_FORMS = {
    "plus": {"lam": "1", "coeffs": {"0": "ref('z0')", "-1": "ref('zm')/(alpha + beta + i + 1)"}},
    "minus": {
        "lam": "(x*(-1)^x - (-1)^x*(gamma + Ne + 1/2) + ref('omega'))/2",
        "coeffs": {"1": "ref('wp')", "0": "ref('w0')/(alpha + beta + i + 1)"},
    },
}


def _entry(rid, forms, parity, eta, bar, N_bar, defs):
    return {
        "id": rid,
        "shift": {"eta": eta, "N_bar": N_bar, "parity": parity, "bar": bar},
        **forms,
        "defs": defs,
    }


def _b(rid, parity, eta, bar, N_bar, defs):
    return _entry(rid, B_FORMS, parity, eta, bar, N_bar, defs)


def _i(rid, parity, eta, bar, N_bar, defs):
    return _entry(rid, I_FORMS, parity, eta, bar, N_bar, defs)


B_ENTRIES = [
    _b("B1", "even", 0, {"alpha": "beta - 1", "beta": "alpha + 1", "gamma": "-gamma"}, "N", {
        "z0": "1",
        "zm": {"even": "ie*(beta + ie)", "odd": "(ie - Ne)*(beta + gamma + ie)"},
        "wp": "1",
        "omega": "gamma - 2*alpha - (N + 3)/2",
        "w0": {"even": "-(alpha - gamma + ie + 1)*(alpha + beta + Ne + ie + 1)",
               "odd": "-(alpha + ie + 1)*(alpha + beta + ie + 1)"},
    }),
    _b("B2", "even", 0, {"alpha": "beta", "beta": "alpha", "gamma": "-gamma + 1"}, "N-1", {
        "z0": "(-1)^ip",
        "zm": {"even": "ie*(alpha + ie)", "odd": "-(alpha + beta + 1 + ie + Ne)*(beta + gamma + ie)"},
        "wp": "(-1)^ip",
        "omega": "-gamma + (1 - N)/2",
        "w0": {"even": "(ie - Ne)*(alpha - gamma + ie + 1)", "odd": "-(beta + ie + 1)*(alpha + beta + ie + 1)"},
    }),
    _b("B3", "odd", 0, {"alpha": "beta - 1", "beta": "alpha + 1", "gamma": "-gamma"}, "N-1", {
        "z0": "1",
        "zm": {"even": "ie*(alpha + beta + Ne + ie + 1)", "odd": "(alpha + 1 + ie)*(beta + gamma + ie)"},
        "wp": "1",
        "omega": "gamma + N/2",
        "w0": {"even": "-(beta + ie)*(alpha - gamma + ie + 1)", "odd": "(Ne - ie)*(alpha + beta + ie + 1)"},
    }),
    _b("B4", "odd", 0, {"alpha": "beta - 1", "beta": "alpha + 1", "gamma": "-gamma"}, "N", {
        "z0": "(-1)^ip",
        "zm": {"even": "ie*(ie - Ne - 1)", "odd": "-(beta + ie)*(beta + gamma + ie)"},
        "wp": "(-1)^ip",
        "omega": "2*alpha - gamma + 2 + N/2",
        "w0": {"even": "(alpha + ie + 1)*(alpha - gamma + ie + 1)",
               "odd": "-(alpha + beta + ie + 1)*(alpha + beta + Ne + ie + 2)"},
    }),
    _b("B5", "even", -1, {"alpha": "alpha - gamma", "beta": "beta + gamma", "gamma": "-gamma"}, "N-1", {
        "z0": "1",
        "zm": {"even": "ie*(beta + ie)", "odd": "(alpha - gamma + ie + 1)*(alpha + beta + Ne + ie + 1)"},
        "wp": "1",
        "omega": "(N + 1)/2 - gamma",
        "w0": {"even": "(Ne - ie)*(beta + gamma + ie)", "odd": "-(alpha + ie + 1)*(alpha + beta + ie + 1)"},
    }),
]

I_ENTRIES = [
    _i("I1", "even", 0, {"alpha": "beta", "beta": "alpha + 1", "gamma": "-gamma"}, "N", {
        "z0": "1",
        "zm": {"even": "-ie*(alpha + ie + 1)", "odd": "(alpha - gamma + ie + 1)*(Ne - ie)"},
        "wp": "1",
        "omega": "2*beta + gamma + (N + 1)/2",
        "w0": {"even": "(beta + ie)*(alpha + beta + ie + 1)",
               "odd": "(alpha + beta + Ne + ie + 2)*(beta + gamma + ie + 1)"},
    }),
    _i("I2", "even", 0, {"alpha": "beta - 1", "beta": "alpha + 2", "gamma": "-gamma - 1"}, "N-1", {
        "z0": "1",
        "zm": {"even": "-ie*(alpha + beta + ie + Ne + 1)", "odd": "-(beta + ie)*(alpha - gamma + ie + 1)"},
        "wp": "1",
        "omega": "gamma - (N - 1)/2",
        "w0": {"even": "(alpha + beta + ie + 1)*(ie - Ne)", "odd": "(alpha + ie + 2)*(beta + gamma + ie + 1)"},
    }),
    _i("I3", "odd", 0, {"alpha": "beta", "beta": "alpha + 1", "gamma": "-gamma"}, "N", {
        "z0": "(-1)^ip",
        "zm": {"even": "ie*(ie - Ne - 1)", "odd": "-(alpha + ie + 1)*(alpha - gamma + ie + 1)"},
        "wp": "-(-1)^ip",
        "omega": "-2*beta - gamma - (N + 2)/2",
        "w0": {"even": "-(alpha + beta + Ne + ie + 2)*(alpha + beta + ie + 1)",
               "odd": "(beta + ie + 1)*(beta + gamma + ie + 1)"},
    }),
    _i("I4", "odd", 0, {"alpha": "beta", "beta": "alpha + 1", "gamma": "-gamma"}, "N-1", {
        "z0": "(-1)^ip",
        "zm": {"even": "ie*(beta + ie)", "odd": "-(alpha + beta + Ne + ie + 2)*(alpha - gamma + ie + 1)"},
        "wp": "-(-1)^ip",
        "omega": "-gamma + N/2",
        "w0": {"even": "-(alpha + beta + ie + 1)*(alpha + ie + 1)", "odd": "(ie - Ne)*(beta + gamma + ie + 1)"},
    }),
    _i("I5", "odd", -1, {"alpha": "alpha - gamma + 1", "beta": "beta + gamma", "gamma": "-gamma + 1"}, "N-1", {
        "z0": "1",
        "zm": {"even": "-ie*(beta + gamma + ie)", "odd": "-(alpha + ie + 1)*(alpha + beta + Ne + ie + 2)"},
        "wp": "-1",
        "omega": "gamma + N/2",
        "w0": {"even": "-(alpha - gamma + ie + 1)*(alpha + beta + ie + 1)", "odd": "(beta + ie + 1)*(Ne - ie)"},
    }),
]

CATALOG = [("BI", "BI", B_ENTRIES), ("CBI", "BI", I_ENTRIES)]
