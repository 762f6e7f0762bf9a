"""B2 and B2' relations of the q-Racah family.

``ref('lambda', 0)`` is the relation's own lambda at x = 0 and ``ref('1')``
is another coefficient of the same relation at the same degree.
"""

LAM0_REST = "ref('lambda', 0) - ref('1') - ref('-1')"
MINUS_REST = "-ref('1') - ref('-1')"

B2 = [
    dict(
        id="qRI/II", parts=["qRI", "qRII"],
        shift=dict(eta=0, N_bar="N-1", map={"gamma": "gamma/q"}),
        plus=dict(
            lam="(1 - beta*gamma*q^x)*(1 - beta*q^(N-x)) / (beta*q*(1 - beta*gamma))",
            coeffs={
                "1": "(1 - q^(i-N))*(1 - alpha*beta*q^(i+1))*(q^i - q^(N-1))*(1 - alpha*q^(i+1))"
                     " / ((1 - q^(-N))*(1 - alpha*beta*q^(2*i+1))*(1 - alpha*beta*q^(2*i+2)))",
                "-1": "(1 - q^i)*(1 - alpha*beta*q^(N+i+1))*(1 - beta*q^i)*(1 - alpha*beta*q^(N+i))"
                      " / (beta*q*(1 - q^N)*(1 - alpha*beta*q^(2*i))*(1 - alpha*beta*q^(2*i+1)))",
                "0": LAM0_REST,
            },
        ),
    ),
    dict(
        id="qRI/III", parts=["qRI", "qRIII"],
        shift=dict(eta=1, N_bar="N", map={"alpha": "alpha/q", "beta": "q*beta", "gamma": "gamma/q^2"}),
        plus=dict(
            lam="(1 - q^(-x-1))*(1 - gamma*q^(x-N-1)) / ((1 - beta*gamma)*(1 - alpha))",
            coeffs={
                "1": "-q^i*(1 - q^(i-N))*(1 - alpha*beta*q^(i+1)) / ((1 - alpha*beta*q^(2*i+1))*(1 - alpha*beta*q^(2*i+2)))",
                "-1": "-q^(i-N-1)*(1 - q^i)*(1 - alpha*beta*q^(N+i+1)) / ((1 - alpha*beta*q^(2*i))*(1 - alpha*beta*q^(2*i+1)))",
                "0": MINUS_REST,
            },
        ),
    ),
    dict(
        id="qRI/IV", parts=["qRI", "qRIV"],
        shift=dict(eta=0, N_bar="N-1", map={"alpha": "alpha/q", "beta": "q*beta", "gamma": "gamma/q"}),
        plus=dict(
            lam="(1 - alpha*q^x)*(gamma - alpha*q^(N-x)) / (alpha*q*(1 - alpha))",
            coeffs={
                "1": "(q^i - q^(N-1))*(q^i - q^N)*(1 - alpha*beta*q^(i+1))*(1 - beta*gamma*q^(i+1))"
                     " / ((1 - q^N)*(1 - alpha*beta*q^(2*i+1))*(1 - alpha*beta*q^(2*i+2)))",
                "-1": "(1 - q^i)*(1 - alpha*beta*q^(N+i))*(1 - alpha*beta*q^(N+i+1))*(gamma - alpha*q^i)"
                      " / (alpha*q*(1 - q^N)*(1 - alpha*beta*q^(2*i))*(1 - alpha*beta*q^(2*i+1)))",
                "0": LAM0_REST,
            },
        ),
    ),
    dict(
        id="qRII/I", parts=["qRII", "qRI"],
        shift=dict(eta=0, N_bar="N+1", map={"gamma": "q*gamma"}),
        plus=dict(
            lam="(1 - gamma*q^(x+1))*(1 - q^(N-x+1)) / (1 - q^(N+1))",
            coeffs={
                "1": "(1 - alpha*beta*q^(i+1))*(1 - beta*gamma*q^(i+1))*(1 - beta*gamma*q^(i+2))*(1 - alpha*q^(i+1))"
                     " / ((1 - beta*gamma*q)*(1 - alpha*beta*q^(2*i+1))*(1 - alpha*beta*q^(2*i+2)))",
                "-1": "beta*q^2*(1 - q^i)*(1 - beta*q^i)*(gamma - alpha*q^(i-1))*(gamma - alpha*q^i)"
                      " / ((1 - beta*gamma*q)*(1 - alpha*beta*q^(2*i))*(1 - alpha*beta*q^(2*i+1)))",
                "0": LAM0_REST,
            },
        ),
    ),
    dict(
        id="qRII/III", parts=["qRII", "qRIII"],
        shift=dict(eta=1, N_bar="N+1", map={"alpha": "alpha/q", "beta": "q*beta", "gamma": "gamma/q"}),
        plus=dict(
            lam="(1 - q^(-x-1))*(1 - gamma*q^(x-N-1)) / ((1 - alpha)*(1 - q^(N+1)))",
            coeffs={
                "1": "q^(i-N-1)*(1 - alpha*beta*q^(i+1))*(1 - beta*gamma*q^(i+1))"
                     " / ((1 - alpha*beta*q^(2*i+1))*(1 - alpha*beta*q^(2*i+2)))",
                "-1": "beta*q^(i-N-1)*(1 - q^i)*(gamma - alpha*q^i) / ((1 - alpha*beta*q^(2*i))*(1 - alpha*beta*q^(2*i+1)))",
                "0": MINUS_REST,
            },
        ),
    ),
    dict(
        id="qRII/IV", parts=["qRII", "qRIV"],
        shift=dict(eta=0, N_bar="N", map={"alpha": "alpha/q", "beta": "q*beta"}),
        plus=dict(
            lam="(1 - alpha*q^x)*(gamma - alpha*q^(N-x)) / (alpha*(1 - alpha))",
            coeffs={
                "1": "-(q^N - q^i)*(1 - alpha*beta*q^(i+1))*(1 - beta*gamma*q^(i+1))*(1 - beta*gamma*q^(i+2))"
                     " / ((1 - beta*gamma*q)*(1 - alpha*beta*q^(2*i+1))*(1 - alpha*beta*q^(2*i+2)))",
                "-1": "-beta*q*(1 - q^i)*(gamma - alpha*q^(i-1))*(gamma - alpha*q^i)*(1 - alpha*beta*q^(N+i+1))"
                      " / (alpha*(1 - beta*gamma*q)*(1 - alpha*beta*q^(2*i))*(1 - alpha*beta*q^(2*i+1)))",
                "0": LAM0_REST,
            },
        ),
    ),
    dict(
        id="qRIII/I", parts=["qRIII", "qRI"],
        shift=dict(eta=-1, N_bar="N", map={"alpha": "q*alpha", "beta": "beta/q", "gamma": "q^2*gamma"}),
        plus=dict(
            lam="(1 - gamma*q^(x+1))*(1 - q^(N-x+1))",
            coeffs={
                "1": "(1 - q^(N-i))*(1 - alpha*q^(i+1))*(1 - alpha*q^(i+2))*(1 - alpha*beta*q^(i+1))"
                     "*(1 - beta*gamma*q^(i+1))*(1 - beta*gamma*q^(i+2))"
                     " / ((1 - alpha*q)*(1 - beta*gamma*q)*(1 - alpha*beta*q^(2*i+1))*(1 - alpha*beta*q^(2*i+2)))",
                "0": "q*(1 - alpha*q^(i+1))*(1 - beta*q^i)*(1 - beta*gamma*q^(i+1))*(alpha*q^i - gamma)"
                     " / ((1 - alpha*q)*(1 - beta*gamma*q)*(1 - alpha*beta*q^(2*i+1)))"
                     " * (q*(1 - q^(N-i))*(1 - alpha*beta*q^(i+1)) / (1 - alpha*beta*q^(2*i+2))"
                     " + (1 - q^(-i))*(1 - alpha*beta*q^(N+i+1)) / (1 - alpha*beta*q^(2*i)))",
                "-1": "q^3*(1 - q^(-i))*(alpha*q^(i-1) - gamma)*(alpha*q^i - gamma)*(1 - beta*q^(i-1))*(1 - beta*q^i)"
                      "*(1 - alpha*beta*q^(N+i+1))"
                      " / ((1 - alpha*q)*(1 - beta*gamma*q)*(1 - alpha*beta*q^(2*i))*(1 - alpha*beta*q^(2*i+1)))",
            },
        ),
    ),
    dict(
        id="qRIII/II", parts=["qRIII", "qRII"],
        shift=dict(eta=-1, N_bar="N-1", map={"alpha": "q*alpha", "beta": "beta/q", "gamma": "q*gamma"}),
        plus=dict(
            lam="(1 - beta*gamma*q^x)*(1 - beta*q^(N-x)) / beta",
            coeffs={
                "1": "(1 - q^(N-i))*(q^i - q^(N-1))*(1 - alpha*q^(i+1))*(1 - alpha*q^(i+2))*(1 - alpha*beta*q^(i+1))"
                     "*(1 - beta*gamma*q^(i+1))"
                     " / ((1 - q^N)*(1 - alpha*q)*(1 - alpha*beta*q^(2*i+1))*(1 - alpha*beta*q^(2*i+2)))",
                "0": "(1 - q^(N-i))*(1 - alpha*q^(i+1))*(1 - beta*q^i)*(1 - alpha*beta*q^(N+i+1))"
                     " / ((1 - q^N)*(1 - alpha*q)*(1 - alpha*beta*q^(2*i+1)))"
                     " * ((1 - alpha*beta*q^(i+1))*(1 - beta*gamma*q^(i+1)) / (beta*(1 - alpha*beta*q^(2*i+2)))"
                     " + (1 - q^i)*(gamma - alpha*q^i) / (1 - alpha*beta*q^(2*i)))",
                "-1": "q*(1 - q^i)*(gamma*q^(-i) - alpha)*(1 - beta*q^(i-1))*(1 - beta*q^i)*(1 - alpha*beta*q^(N+i))"
                      "*(1 - alpha*beta*q^(N+i+1))"
                      " / (beta*(1 - q^N)*(1 - alpha*q)*(1 - alpha*beta*q^(2*i))*(1 - alpha*beta*q^(2*i+1)))",
            },
        ),
    ),
    dict(
        id="qRIII/IV", parts=["qRIII", "qRIV"],
        shift=dict(eta=-1, N_bar="N-1", map={"gamma": "q*gamma"}),
        plus=dict(
            lam="(1 - alpha*q^x)*(gamma - alpha*q^(N-x)) / alpha",
            coeffs={
                "1": "(1 - q^(N-i))*(q^i - q^(N-1))*(1 - alpha*q^(i+1))*(1 - alpha*beta*q^(i+1))*(1 - beta*gamma*q^(i+1))"
                     "*(1 - beta*gamma*q^(i+2))"
                     " / ((1 - q^N)*(1 - beta*gamma*q)*(1 - alpha*beta*q^(2*i+1))*(1 - alpha*beta*q^(2*i+2)))",
                "0": "(1 - q^(N-i))*(1 - beta*gamma*q^(i+1))*(1 - alpha*beta*q^(N+i+1))*(gamma - alpha*q^i)"
                     " / ((1 - q^N)*(1 - beta*gamma*q)*(1 - alpha*beta*q^(2*i+1)))"
                     " * ((1 - alpha*q^(i+1))*(1 - alpha*beta*q^(i+1)) / (alpha*(1 - alpha*beta*q^(2*i+2)))"
                     " + (1 - q^i)*(1 - beta*q^i) / (1 - alpha*beta*q^(2*i)))",
                "-1": "(1 - q^i)*(gamma*q^(1-i) - alpha*q)*(gamma - alpha*q^(i-1))*(1 - beta*q^i)*(1 - alpha*beta*q^(N+i))"
                      "*(1 - alpha*beta*q^(N+i+1))"
                      " / (alpha*(1 - q^N)*(1 - beta*gamma*q)*(1 - alpha*beta*q^(2*i))*(1 - alpha*beta*q^(2*i+1)))",
            },
        ),
    ),
    dict(
        id="qRIV/I", parts=["qRIV", "qRI"],
        shift=dict(eta=0, N_bar="N+1", map={"alpha": "q*alpha", "beta": "beta/q", "gamma": "q*gamma"}),
        plus=dict(
            lam="(1 - gamma*q^(x+1))*(1 - q^(N-x+1)) / (1 - q^(N+1))",
            coeffs={
                "1": "(1 - alpha*q^(i+1))*(1 - alpha*q^(i+2))*(1 - alpha*beta*q^(i+1))*(1 - beta*gamma*q^(i+1))"
                     " / ((1 - alpha*q)*(1 - alpha*beta*q^(2*i+1))*(1 - alpha*beta*q^(2*i+2)))",
                "-1": "-alpha*q^2*(1 - q^i)*(1 - beta*q^(i-1))*(1 - beta*q^i)*(alpha*q^i - gamma)"
                      " / ((1 - alpha*q)*(1 - alpha*beta*q^(2*i))*(1 - alpha*beta*q^(2*i+1)))",
                "0": LAM0_REST,
            },
        ),
    ),
    dict(
        id="qRIV/II", parts=["qRIV", "qRII"],
        shift=dict(eta=0, N_bar="N", map={"alpha": "q*alpha", "beta": "beta/q"}),
        plus=dict(
            lam="(1 - beta*gamma*q^x)*(1 - beta*q^(N-x)) / (beta*(1 - beta*gamma))",
            coeffs={
                "1": "(1 - alpha*q^(i+1))*(1 - alpha*beta*q^(i+1))*(q^i - q^N)*(1 - alpha*q^(i+2))"
                     " / ((1 - alpha*q)*(1 - alpha*beta*q^(2*i+1))*(1 - alpha*beta*q^(2*i+2)))",
                "-1": "-alpha*q*(1 - q^i)*(1 - beta*q^(i-1))*(1 - beta*q^i)*(1 - alpha*beta*q^(N+i+1))"
                      " / (beta*(1 - alpha*q)*(1 - alpha*beta*q^(2*i))*(1 - alpha*beta*q^(2*i+1)))",
                "0": LAM0_REST,
            },
        ),
    ),
    dict(
        id="qRIV/III", parts=["qRIV", "qRIII"],
        shift=dict(eta=1, N_bar="N+1", map={"gamma": "gamma/q"}),
        plus=dict(
            lam="(1 - q^(-x-1))*(1 - gamma*q^(x-N-1)) / ((1 - beta*gamma)*(1 - q^(N+1)))",
            coeffs={
                "1": "q^(i-N-1)*(1 - alpha*q^(i+1))*(1 - alpha*beta*q^(i+1)) / ((1 - alpha*beta*q^(2*i+1))*(1 - alpha*beta*q^(2*i+2)))",
                "-1": "alpha*q^(i-N-1)*(1 - q^i)*(1 - beta*q^i) / ((1 - alpha*beta*q^(2*i))*(1 - alpha*beta*q^(2*i+1)))",
                "0": MINUS_REST,
            },
        ),
    ),
]

PLUS_REST = "1 - ref('0') - ref('-2')"
LAM0_MINUS = "ref('lambda', 0) - ref('2') - ref('0')"
MINUS_MINUS = "-ref('2') - ref('0')"

B2P = [
    dict(
        id="qRI/I'", parts=["qRI", "qRI"],
        shift=dict(eta=0, N_bar="N-2", map={"beta": "q^2*beta", "gamma": "gamma/q^2"}),
        plus=dict(
            lam="1",
            coeffs={
                "0": "(1 - q^(i-N))*(1 - q^(i-N+1))*(1 - alpha*beta*q^(i+1))*(1 - alpha*beta*q^(i+2))"
                     " / ((1 - q^(-N))*(1 - q^(-N+1))*(1 - alpha*beta*q^(2*i+1))*(1 - alpha*beta*q^(2*i+2)))",
                "-2": "(1 - q^(i-1))*(1 - q^i)*(1 - alpha*beta*q^(N+i))*(1 - alpha*beta*q^(N+i+1))"
                      " / ((1 - q^(N-1))*(1 - q^N)*(1 - alpha*beta*q^(2*i))*(1 - alpha*beta*q^(2*i+1)))",
                "-1": PLUS_REST,
            },
        ),
        minus=dict(
            lam="(1 - gamma*q^(x-1))*(1 - gamma*q^x)*(1 - q^(N-x-1))*(1 - q^(N-x)) / ((1 - q^(N-1))*(1 - q^N))",
            coeffs={
                "2": "(1 - alpha*q^(i+1))*(1 - alpha*q^(i+2))*(1 - beta*gamma*q^(i+1))*(1 - beta*gamma*q^(i+2))"
                     " / ((1 - alpha*beta*q^(2*i+3))*(1 - alpha*beta*q^(2*i+4)))",
                "0": "(1 - beta*q^(i+1))*(1 - beta*q^(i+2))*(alpha*q^(i+1) - gamma)*(alpha*q^(i+2) - gamma)"
                     " / (q*(1 - alpha*beta*q^(2*i+2))*(1 - alpha*beta*q^(2*i+3)))",
                "1": LAM0_MINUS,
            },
        ),
    ),
    dict(
        id="qRI/II'", parts=["qRI", "qRII"],
        shift=dict(eta=0, N_bar="N-1", map={"beta": "q^2*beta", "gamma": "gamma/q"}),
        plus=dict(
            lam="1",
            coeffs={
                "0": "(1 - q^(i-N))*(1 - beta*gamma*q^(i+1))*(1 - alpha*beta*q^(i+1))*(1 - alpha*beta*q^(i+2))"
                     " / ((1 - q^(-N))*(1 - beta*gamma*q)*(1 - alpha*beta*q^(2*i+1))*(1 - alpha*beta*q^(2*i+2)))",
                "-2": "-beta*q*(1 - q^(i-1))*(1 - q^i)*(1 - alpha*beta*q^(N+i+1))*(gamma - alpha*q^i)"
                      " / ((1 - q^N)*(1 - beta*gamma*q)*(1 - alpha*beta*q^(2*i))*(1 - alpha*beta*q^(2*i+1)))",
                "-1": PLUS_REST,
            },
        ),
        minus=dict(
            lam="(1 - gamma*q^x)*(1 - q^(N-x))*(1 - beta*gamma*q^(x+1))*(1 - beta*q^(N+1-x))"
                " / (beta*q*(1 - q^N)*(1 - beta*gamma*q))",
            coeffs={
                "2": "(1 - alpha*q^(i+1))*(1 - alpha*q^(i+2))*(1 - beta*gamma*q^(i+2))*(q^(i+1) - q^N)"
                     " / ((1 - alpha*beta*q^(2*i+3))*(1 - alpha*beta*q^(2*i+4)))",
                "0": "(1 - beta*q^(i+1))*(1 - beta*q^(i+2))*(alpha*q^(i+1) - gamma)*(1 - alpha*beta*q^(N+i+2))"
                     " / (beta*q*(1 - alpha*beta*q^(2*i+2))*(1 - alpha*beta*q^(2*i+3)))",
                "1": LAM0_MINUS,
            },
        ),
    ),
    dict(
        id="qRI/III'", parts=["qRI", "qRIII"],
        # the stored offset -2 coefficient fails verification as printed; the printed text is kept here
        printed=dict(plus={
            "-2": "(1 - q^(i-1))*(1 - q^i)*(1 - alpha*beta*q^(N+i))*(1 - alpha*beta*q^(N+i+1))*(gamma*q^(1-i) - alpha*q)"
                  "*(1 - beta*q)"
                  " / ((1 - q^(N-1))*(1 - q^N)*(1 - alpha*q)*(1 - beta*gamma*q)*(1 - alpha*beta*q^(2*i))"
                  "*(1 - alpha*beta*q^(2*i+1)))"}),
        correction="factor (1 - beta*q) of the offset -2 coefficient replaced by (1 - beta*q^i)",
        shift=dict(eta=-1, N_bar="N-2", map={"alpha": "q*alpha", "beta": "q*beta"}),
        plus=dict(
            lam="1",
            coeffs={
                "0": "(1 - q^(i-N))*(1 - q^(N-i-1))*(1 - alpha*beta*q^(i+1))*(1 - alpha*beta*q^(i+2))*(1 - alpha*q^(i+1))"
                     "*(1 - beta*gamma*q^(i+1))"
                     " / ((1 - q^(-N))*(1 - q^(N-1))*(1 - alpha*q)*(1 - beta*gamma*q)*(1 - alpha*beta*q^(2*i+1))"
                     "*(1 - alpha*beta*q^(2*i+2)))",
                "-1": "(1 - q^(N-i))*(1 - alpha*beta*q^(i+1))*(1 - q^i)*(1 - alpha*beta*q^(N+i+1))"
                      " / ((1 - alpha*q)*(1 - beta*gamma*q)*(1 - q^(N-1))*(1 - q^N)*(1 - alpha*beta*q^(2*i+1)))"
                      " * ((gamma - alpha*q^(i+1))*(1 - beta*q^(i+1)) / (1 - alpha*beta*q^(2*i+2))"
                      " + (1 - beta*gamma*q^i)*(1 - alpha*q^i) / (1 - alpha*beta*q^(2*i)))",
                "-2": "(1 - q^(i-1))*(1 - q^i)*(1 - alpha*beta*q^(N+i))*(1 - alpha*beta*q^(N+i+1))*(gamma*q^(1-i) - alpha*q)"
                      "*(1 - beta*q^i)"
                      " / ((1 - q^(N-1))*(1 - q^N)*(1 - alpha*q)*(1 - beta*gamma*q)*(1 - alpha*beta*q^(2*i))"
                      "*(1 - alpha*beta*q^(2*i+1)))",
            },
        ),
        minus=dict(
            lam="(1 - gamma*q^x)*(1 - q^(N-x))*(1 - q^(-x))*(1 - gamma*q^(x-N))"
                " / ((1 - q^(N-1))*(1 - q^N)*(1 - alpha*q)*(1 - beta*gamma*q))",
            coeffs={
                "2": "q^(i-N+1)*(1 - alpha*q^(i+2))*(1 - beta*gamma*q^(i+2)) / ((1 - alpha*beta*q^(2*i+3))*(1 - alpha*beta*q^(2*i+4)))",
                "0": "-q^(i-N+1)*(1 - beta*q^(i+1))*(alpha*q^(i+1) - gamma) / ((1 - alpha*beta*q^(2*i+2))*(1 - alpha*beta*q^(2*i+3)))",
                "1": MINUS_MINUS,
            },
        ),
    ),
    dict(
        id="qRI/IV'", parts=["qRI", "qRIV"],
        shift=dict(eta=0, N_bar="N-1", map={"alpha": "q*alpha", "beta": "q*beta", "gamma": "gamma/q"}),
        plus=dict(
            lam="1",
            coeffs={
                "0": "(1 - q^(i-N))*(1 - alpha*beta*q^(i+1))*(1 - alpha*beta*q^(i+2))*(1 - alpha*q^(i+1))"
                     " / ((1 - q^(-N))*(1 - alpha*q)*(1 - alpha*beta*q^(2*i+1))*(1 - alpha*beta*q^(2*i+2)))",
                "-2": "-alpha*q*(1 - q^(i-1))*(1 - q^i)*(1 - alpha*beta*q^(N+i+1))*(1 - beta*q^i)"
                      " / ((1 - q^N)*(1 - alpha*q)*(1 - alpha*beta*q^(2*i))*(1 - alpha*beta*q^(2*i+1)))",
                "-1": PLUS_REST,
            },
        ),
        minus=dict(
            lam="(1 - gamma*q^x)*(1 - q^(N-x))*(1 - alpha*q^(x+1))*(gamma - alpha*q^(N+1-x)) / (alpha*q*(1 - q^N)*(1 - alpha*q))",
            coeffs={
                "2": "-(q^N - q^(i+1))*(1 - alpha*q^(i+2))*(1 - beta*gamma*q^(i+1))*(1 - beta*gamma*q^(i+2))"
                     " / ((1 - alpha*beta*q^(2*i+3))*(1 - alpha*beta*q^(2*i+4)))",
                "0": "(1 - beta*q^(i+1))*(alpha*q^(i+2) - gamma)*(1 - alpha*beta*q^(N+i+2))*(gamma - alpha*q^(i+1))"
                     " / (alpha*q*(1 - alpha*beta*q^(2*i+2))*(1 - alpha*beta*q^(2*i+3)))",
                "1": LAM0_MINUS,
            },
        ),
    ),
    dict(
        id="qRII/II'", parts=["qRII", "qRII"],
        shift=dict(eta=0, N_bar="N", map={"beta": "q^2*beta"}),
        plus=dict(
            lam="1",
            coeffs={
                "0": "(1 - alpha*beta*q^(i+1))*(1 - alpha*beta*q^(i+2))*(1 - beta*gamma*q^(i+1))*(1 - beta*gamma*q^(i+2))"
                     " / ((1 - beta*gamma*q)*(1 - beta*gamma*q^2)*(1 - alpha*beta*q^(2*i+1))*(1 - alpha*beta*q^(2*i+2)))",
                "-2": "beta^2*q^3*(1 - q^(i-1))*(1 - q^i)*(gamma - alpha*q^(i-1))*(gamma - alpha*q^i)"
                      " / ((1 - beta*gamma*q)*(1 - beta*gamma*q^2)*(1 - alpha*beta*q^(2*i))*(1 - alpha*beta*q^(2*i+1)))",
                "-1": PLUS_REST,
            },
        ),
        minus=dict(
            lam="(1 - beta*gamma*q^(x+1))*(1 - beta*gamma*q^(x+2))*(1 - beta*q^(N+1-x))*(1 - beta*q^(N+2-x))"
                " / (beta^2*q^3*(1 - beta*gamma*q)*(1 - beta*gamma*q^2))",
            coeffs={
                "2": "(q^i - q^N)*(q^(i+1) - q^N)*(1 - alpha*q^(i+1))*(1 - alpha*q^(i+2))"
                     " / ((1 - alpha*beta*q^(2*i+3))*(1 - alpha*beta*q^(2*i+4)))",
                "0": "(1 - beta*q^(i+1))*(1 - beta*q^(i+2))*(1 - alpha*beta*q^(N+i+2))*(1 - alpha*beta*q^(N+i+3))"
                     " / (beta^2*q^3*(1 - alpha*beta*q^(2*i+2))*(1 - alpha*beta*q^(2*i+3)))",
                "1": LAM0_MINUS,
            },
        ),
    ),
    dict(
        id="qRII/III'", parts=["qRII", "qRIII"],
        shift=dict(eta=-1, N_bar="N-1", map={"alpha": "q*alpha", "beta": "q*beta", "gamma": "q*gamma"}),
        plus=dict(
            lam="1",
            coeffs={
                "0": "(1 - alpha*beta*q^(i+1))*(1 - alpha*beta*q^(i+2))*(1 - beta*gamma*q^(i+1))*(1 - beta*gamma*q^(i+2))"
                     "*(1 - q^(N-i))*(1 - alpha*q^(i+1))"
                     " / ((1 - beta*gamma*q)*(1 - beta*gamma*q^2)*(1 - q^N)*(1 - alpha*q)*(1 - alpha*beta*q^(2*i+1))"
                     "*(1 - alpha*beta*q^(2*i+2)))",
                "-1": "(1 - q^i)*(1 - alpha*beta*q^(i+1))*(1 - beta*gamma*q^(i+1))*(gamma*q^(1-i) - alpha*q)"
                      " / ((1 - beta*gamma*q)*(1 - beta*gamma*q^2)*(1 - alpha*beta*q^(2*i+1))*(1 - q^N)*(1 - alpha*q))"
                      " * ((1 - beta*q^(i+1))*(1 - alpha*beta*q^(N+i+2)) / (1 - alpha*beta*q^(2*i+2))"
                      " - beta*q^i*(1 - q^(N-i+1))*(1 - alpha*q^i) / (1 - alpha*beta*q^(2*i)))",
                "-2": "-beta*q*(1 - q^(i-1))*(1 - q^i)*(gamma*q^(2-i) - alpha*q)*(gamma - alpha*q^i)*(1 - beta*q^i)"
                      "*(1 - alpha*beta*q^(N+i+1))"
                      " / ((1 - beta*gamma*q)*(1 - beta*gamma*q^2)*(1 - q^N)*(1 - alpha*q)*(1 - alpha*beta*q^(2*i))"
                      "*(1 - alpha*beta*q^(2*i+1)))",
            },
        ),
        minus=dict(
            lam="(1 - beta*gamma*q^(x+1))*(1 - q^(-x))*(1 - beta*q^(N+1-x))*(1 - gamma*q^(x-N))"
                " / (beta*q*(1 - beta*gamma*q)*(1 - beta*gamma*q^2)*(1 - alpha*q)*(1 - q^N))",
            coeffs={
                "2": "q^(i+1-N)*(q^i - q^(N-1))*(1 - alpha*q^(i+2)) / ((1 - alpha*beta*q^(2*i+3))*(1 - alpha*beta*q^(2*i+4)))",
                "0": "-q^(i-N-1)*(1 - beta*q^(i+1))*(1 - alpha*beta*q^(N+i+2))"
                     " / (beta*(1 - alpha*beta*q^(2*i+2))*(1 - alpha*beta*q^(2*i+3)))",
                "1": MINUS_MINUS,
            },
        ),
    ),
    dict(
        id="qRII/IV'", parts=["qRII", "qRIV"],
        shift=dict(eta=0, N_bar="N", map={"alpha": "q*alpha", "beta": "q*beta"}),
        plus=dict(
            lam="1",
            coeffs={
                "0": "(1 - alpha*q^(i+1))*(1 - beta*gamma*q^(i+1))*(1 - alpha*beta*q^(i+1))*(1 - alpha*beta*q^(i+2))"
                     " / ((1 - alpha*q)*(1 - beta*gamma*q)*(1 - alpha*beta*q^(2*i+1))*(1 - alpha*beta*q^(2*i+2)))",
                "-2": "alpha*beta*q^2*(1 - q^(i-1))*(1 - q^i)*(1 - beta*q^i)*(gamma - alpha*q^i)"
                      " / ((1 - alpha*q)*(1 - beta*gamma*q)*(1 - alpha*beta*q^(2*i))*(1 - alpha*beta*q^(2*i+1)))",
                "-1": PLUS_REST,
            },
        ),
        minus=dict(
            lam="(1 - beta*gamma*q^(x+1))*(1 - beta*q^(N+1-x))*(1 - alpha*q^(x+1))*(gamma - alpha*q^(N+1-x))"
                " / (alpha*beta*q^2*(1 - alpha*q)*(1 - beta*gamma*q))",
            coeffs={
                "2": "-(q^i - q^N)*(q^N - q^(i+1))*(1 - alpha*q^(i+2))*(1 - beta*gamma*q^(i+2))"
                     " / ((1 - alpha*beta*q^(2*i+3))*(1 - alpha*beta*q^(2*i+4)))",
                "0": "(1 - beta*q^(i+1))*(gamma - alpha*q^(i+1))*(1 - alpha*beta*q^(N+i+2))*(1 - alpha*beta*q^(N+i+3))"
                     " / (alpha*beta*q^2*(1 - alpha*beta*q^(2*i+2))*(1 - alpha*beta*q^(2*i+3)))",
                "1": LAM0_MINUS,
            },
        ),
    ),
    dict(
        id="qRIII/III'", parts=["qRIII", "qRIII"],
        printed=dict(plus={
            "-2": "q^3*(1 - q^(i-1))*(1 - q^i)*(gamma*q^(-i) - alpha)*(gamma*q^(1-i) - alpha)*(1 - beta*q^(i-1))"
                  "*(1 - beta*q^i)"
                  " / ((1 - q^(N-1))*(1 - q^N)*(1 - alpha*q)*(1 - alpha*q^2)*(1 - beta*gamma*q)*(1 - beta*gamma*q^2))"
                  " * (1 - alpha*beta*q^(N+i+1))*(1 - alpha*beta*q^(N+i+2))"
                  " / ((1 - alpha*beta*q^(2*i))*(1 - alpha*beta*q^(2*i+1)))"}),
        correction="factors (1 - alpha*beta*q^(N+i+1))*(1 - alpha*beta*q^(N+i+2)) of the offset -2 coefficient"
                   " replaced by (1 - alpha*beta*q^(N+i))*(1 - alpha*beta*q^(N+i+1))",
        shift=dict(eta=-2, N_bar="N-2", map={"alpha": "q^2*alpha", "gamma": "q^2*gamma"}),
        plus=dict(
            lam="1",
            coeffs={
                "0": "(1 - q^(N-i-1))*(1 - q^(N-i))*(1 - alpha*q^(i+1))*(1 - alpha*q^(i+2))*(1 - beta*gamma*q^(i+1))"
                     "*(1 - beta*gamma*q^(i+2))"
                     " / ((1 - q^(N-1))*(1 - q^N)*(1 - alpha*q)*(1 - alpha*q^2)*(1 - beta*gamma*q)*(1 - beta*gamma*q^2))"
                     " * (1 - alpha*beta*q^(i+1))*(1 - alpha*beta*q^(i+2))"
                     " / ((1 - alpha*beta*q^(2*i+1))*(1 - alpha*beta*q^(2*i+2)))",
                "-1": "(1 - q^i)*(1 - q^(N-i))*(1 - alpha*q^(i+1))*(1 - beta*gamma*q^(i+1))*(gamma*q^(1-i) - alpha*q)"
                      "*(1 - beta*q^i)"
                      " / ((1 - q^(N-1))*(1 - q^N)*(1 - alpha*q)*(1 - alpha*q^2)*(1 - beta*gamma*q)*(1 - beta*gamma*q^2))"
                      " * (1 - alpha*beta*q^(i+1))*(1 - alpha*beta*q^(N+i+1))*(1 + q)"
                      " / ((1 - alpha*beta*q^(2*i))*(1 - alpha*beta*q^(2*i+2)))",
                "-2": "q^3*(1 - q^(i-1))*(1 - q^i)*(gamma*q^(-i) - alpha)*(gamma*q^(1-i) - alpha)*(1 - beta*q^(i-1))"
                      "*(1 - beta*q^i)"
                      " / ((1 - q^(N-1))*(1 - q^N)*(1 - alpha*q)*(1 - alpha*q^2)*(1 - beta*gamma*q)*(1 - beta*gamma*q^2))"
                      " * (1 - alpha*beta*q^(N+i))*(1 - alpha*beta*q^(N+i+1))"
                      " / ((1 - alpha*beta*q^(2*i))*(1 - alpha*beta*q^(2*i+1)))",
            },
        ),
        minus=dict(
            lam="(1 - q^(-x))*(1 - q^(-x+1))*(1 - gamma*q^(x-N))*(1 - gamma*q^(x-N+1))"
                " / ((1 - alpha*q)*(1 - alpha*q^2)*(1 - q^(N-1))*(1 - q^N)*(1 - beta*gamma*q)*(1 - beta*gamma*q^2))",
            coeffs={
                "2": "q^(2*i-2*N+2) / ((1 - alpha*beta*q^(2*i+3))*(1 - alpha*beta*q^(2*i+4)))",
                "0": "q^(2*i-2*N+1) / ((1 - alpha*beta*q^(2*i+2))*(1 - alpha*beta*q^(2*i+3)))",
                "1": MINUS_MINUS,
            },
        ),
    ),
    dict(
        id="qRIII/IV'", parts=["qRIII", "qRIV"],
        shift=dict(eta=-1, N_bar="N-1", map={"alpha": "q^2*alpha", "gamma": "q*gamma"}),
        plus=dict(
            lam="1",
            coeffs={
                "0": "(1 - q^(N-i))*(1 - alpha*q^(i+1))*(1 - alpha*q^(i+2))*(1 - alpha*beta*q^(i+1))*(1 - alpha*beta*q^(i+2))"
                     "*(1 - beta*gamma*q^(i+1))"
                     " / ((1 - q^N)*(1 - alpha*q)*(1 - alpha*q^2)*(1 - beta*gamma*q)*(1 - alpha*beta*q^(2*i+1))"
                     "*(1 - alpha*beta*q^(2*i+2)))",
                "-1": "q*(1 - q^i)*(1 - alpha*q^(i+1))*(1 - beta*q^i)*(1 - alpha*beta*q^(i+1))"
                      " / ((1 - q^N)*(1 - alpha*q)*(1 - alpha*q^2)*(1 - beta*gamma*q)*(1 - alpha*beta*q^(2*i+1)))"
                      " * (-alpha*q*(1 - q^(N-i))*(1 - beta*gamma*q^(i+1)) / (1 - alpha*beta*q^(2*i+2))"
                      " + (gamma*q^(-i) - alpha)*(1 - alpha*beta*q^(N+i+1)) / (1 - alpha*beta*q^(2*i)))",
                "-2": "-alpha*q^3*(1 - q^(i-1))*(1 - q^i)*(gamma*q^(-i) - alpha)*(1 - beta*q^(i-1))*(1 - beta*q^i)"
                      "*(1 - alpha*beta*q^(N+i+1))"
                      " / ((1 - q^N)*(1 - alpha*q)*(1 - alpha*q^2)*(1 - beta*gamma*q)*(1 - alpha*beta*q^(2*i))"
                      "*(1 - alpha*beta*q^(2*i+1)))",
            },
        ),
        minus=dict(
            lam="(1 - q^(-x))*(1 - gamma*q^(x-N))*(1 - alpha*q^(x+1))*(gamma - alpha*q^(N+1-x))"
                " / (alpha*q*(1 - alpha*q)*(1 - alpha*q^2)*(1 - beta*gamma*q)*(1 - q^N))",
            coeffs={
                "2": "-q^(i-N)*(q^N - q^(i+1))*(1 - beta*gamma*q^(i+2)) / ((1 - alpha*beta*q^(2*i+3))*(1 - alpha*beta*q^(2*i+4)))",
                "0": "-q^(i-N-1)*(1 - alpha*beta*q^(N+i+2))*(gamma - alpha*q^(i+1))"
                     " / (alpha*(1 - alpha*beta*q^(2*i+2))*(1 - alpha*beta*q^(2*i+3)))",
                "1": MINUS_MINUS,
            },
        ),
    ),
    dict(
        id="qRIV/IV'", parts=["qRIV", "qRIV"],
        shift=dict(eta=0, N_bar="N", map={"alpha": "q^2*alpha"}),
        plus=dict(
            lam="1",
            coeffs={
                "0": "(1 - alpha*q^(i+1))*(1 - alpha*q^(i+2))*(1 - alpha*beta*q^(i+1))*(1 - alpha*beta*q^(i+2))"
                     " / ((1 - alpha*q)*(1 - alpha*q^2)*(1 - alpha*beta*q^(2*i+1))*(1 - alpha*beta*q^(2*i+2)))",
                "-2": "alpha^2*q^3*(1 - q^(i-1))*(1 - q^i)*(1 - beta*q^(i-1))*(1 - beta*q^i)"
                      " / ((1 - alpha*q)*(1 - alpha*q^2)*(1 - alpha*beta*q^(2*i))*(1 - alpha*beta*q^(2*i+1)))",
                "-1": PLUS_REST,
            },
        ),
        minus=dict(
            lam="(1 - alpha*q^(x+1))*(1 - alpha*q^(x+2))*(gamma - alpha*q^(N+1-x))*(gamma - alpha*q^(N+2-x))"
                " / (alpha^2*q^3*(1 - alpha*q)*(1 - alpha*q^2))",
            coeffs={
                "2": "(q^N - q^i)*(q^N - q^(i+1))*(1 - beta*gamma*q^(i+1))*(1 - beta*gamma*q^(i+2))"
                     " / ((1 - alpha*beta*q^(2*i+3))*(1 - alpha*beta*q^(2*i+4)))",
                "0": "(1 - alpha*beta*q^(N+i+2))*(1 - alpha*beta*q^(N+i+3))*(gamma - alpha*q^(i+1))*(gamma - alpha*q^(i+2))"
                     " / (alpha^2*q^3*(1 - alpha*beta*q^(2*i+2))*(1 - alpha*beta*q^(2*i+3)))",
                "1": LAM0_MINUS,
            },
        ),
    ),
]

CATALOG = [("qR", "B2", B2), ("qR", "B2p", B2P)]
