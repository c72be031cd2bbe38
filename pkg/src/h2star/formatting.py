"""Number formatting shared by the CLI and sweep summaries.

17 significant digits round-trip doubles losslessly, keeping emitted tables
diff-stable across runs.
"""


def fmt_float(x) -> str:
    return format(float(x), ".17g")


def fmt_complex(z) -> str:
    z = complex(z)
    return f"{fmt_float(z.real)}{format(z.imag, '+.17g')}j"
