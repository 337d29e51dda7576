"""Complex literals of the form ``-1-7i``, ``3``, ``2.5i`` or ``1e-3-2.5e2i``.

The grammar is: an optional real part, then an optional imaginary part
whose sign is explicit and which ends in ``i``; at least one part must be
present. Formatting uses shortest round-trip floats, so parse(format(z))
reproduces z exactly.
"""

from __future__ import annotations

import re


class ComplexParseError(ValueError):
    def __init__(self, text: str, position: int, reason: str):
        self.text = text
        self.position = position
        self.reason = reason
        super().__init__(f"invalid complex literal {text!r} at position {position}: {reason}")


_NUMBER = re.compile(r"[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?")


def parse_complex(text: str) -> complex:
    s = text.strip()
    if not s:
        raise ComplexParseError(text, 0, "empty literal")
    pos = 0
    real = 0.0
    imag: float | None = None

    m = _NUMBER.match(s, pos)
    if m:
        value = float(m.group())
        pos = m.end()
        if pos < len(s) and s[pos] == "i":
            imag = value
            pos += 1
        else:
            real = value
    elif s[pos] in "+-" and pos + 1 < len(s) and s[pos + 1] == "i":
        imag = 1.0 if s[pos] == "+" else -1.0
        pos += 2
    elif s[pos] == "i":
        imag = 1.0
        pos += 1
    else:
        raise ComplexParseError(text, pos, "expected a number")

    if imag is None and pos < len(s):
        if s[pos] not in "+-":
            raise ComplexParseError(text, pos, "expected '+' or '-' before the imaginary part")
        m = _NUMBER.match(s, pos)
        if m:
            value = float(m.group())
            pos = m.end()
        elif pos + 1 < len(s) and s[pos + 1] == "i":
            value = 1.0 if s[pos] == "+" else -1.0
            pos += 1
        else:
            raise ComplexParseError(text, pos + 1, "expected a number after the sign")
        if pos >= len(s) or s[pos] != "i":
            raise ComplexParseError(text, pos, "imaginary part must end with 'i'")
        imag = value
        pos += 1

    if pos != len(s):
        raise ComplexParseError(text, pos, "unexpected trailing characters")
    return complex(real, 0.0 if imag is None else imag)


def format_complex(z: complex) -> str:
    """Shortest literal that parses back to exactly ``z``."""
    re_part, im_part = z.real, z.imag
    if im_part == 0.0:
        return repr(re_part)
    if re_part == 0.0:
        return f"{im_part!r}i"
    if im_part < 0:
        return f"{re_part!r}-{-im_part!r}i"
    return f"{re_part!r}+{im_part!r}i"
