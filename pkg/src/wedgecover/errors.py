"""Exception type shared by all modules.

Every failure carries a short machine-readable ``code`` (e.g. ``"not-restricted"``)
so that the CLI can map it to an exit status without parsing messages.
"""

PRECONDITION_CODES = frozenset({
    "not-restricted",
    "invalid-e0",
    "not-time-zero",
    "bad-axis",
    "bad-direction",
    "not-a-rotation",
    "not-a-boost",
    "degenerate-plane",
    "not-unit-determinant",
    "identity-input",
    "parallel-axes",
    "degenerate-pair",
    "reducible-input",
    "invalid-zweibein",
})

NUMERIC_CODES = frozenset({"ill-conditioned", "path-step-too-coarse"})


class CoverError(ValueError):
    def __init__(self, code, detail=""):
        super().__init__(f"{code}: {detail}" if detail else code)
        self.code = code
        self.detail = detail
