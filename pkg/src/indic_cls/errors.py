"""Exception types shared across the toolkit."""


class IndicClsError(Exception):
    """Base class for every error raised by this package."""


class UnmappableCharError(IndicClsError):
    """A code point has no counterpart slot in the target script block."""

    def __init__(self, position: int, char: str):
        self.position = position
        self.char = char
        super().__init__(
            f"U+{ord(char):04X} {char!r} at position {position} has no "
            f"counterpart in the target script"
        )


class MalformedWordError(IndicClsError):
    """A word violates the akshara grammar (e.g. starts with a matra)."""

    def __init__(self, position: int, message: str):
        self.position = position
        super().__init__(f"position {position}: {message}")


class MixedScriptError(IndicClsError):
    """A single word mixes code points from more than one script block."""


class InventoryGapError(IndicClsError):
    """An assigned code point has no label in the CLS inventory."""

    def __init__(self, script, index: int):
        self.script = script
        self.index = index
        super().__init__(f"no label for index 0x{index:02X} in {script.name}")


class UnknownLabelError(IndicClsError):
    """A CLS token is not in the inventory and is not a geminate form."""

    def __init__(self, token: str):
        self.token = token
        super().__init__(f"unknown CLS label {token!r}")


class MalformedClsError(IndicClsError):
    """A CLS label sequence violates the inverse grammar."""


class MissingLidError(IndicClsError):
    """Text expected to start with a language-ID token does not."""


class AlreadyTaggedError(IndicClsError):
    """Transcript already starts with a language-ID token."""


class ManifestError(IndicClsError):
    """A corpus manifest line cannot be parsed."""

    def __init__(self, line_no: int, message: str):
        self.line_no = line_no
        super().__init__(f"manifest line {line_no}: {message}")


class LexiconError(IndicClsError):
    """A lexicon file is inconsistent (bad line or failed round trip)."""


class UndefinedRateError(IndicClsError):
    """Error rate requested against an empty reference."""


class UnknownIdError(IndicClsError):
    """A hypothesis id does not occur among the reference ids."""


class MissingHypothesisError(IndicClsError):
    """A reference id has no hypothesis and the policy forbids that."""
