"""Exception types shared across the package."""


class TreeHopfError(Exception):
    """Base class for all errors raised by treehopf."""


class DecomposeLeaf(TreeHopfError):
    """Raised when asking for the root decomposition of the leaf tree."""


class EmptyAlphabet(TreeHopfError):
    """Raised when an operation requires at least one decoration label."""


class ParseError(TreeHopfError):
    """Syntax error in a tree or tree-expression string.

    Carries the byte offset of the failure and the token(s) that were
    expected there.
    """

    def __init__(self, expected: str, text: str, pos: int):
        # pos is a character index into text; report the utf-8 byte offset.
        self.offset = len(text[:pos].encode("utf-8"))
        self.expected = expected
        super().__init__(f"offset {self.offset}: expected {expected}")


class NotAdmissible(TreeHopfError):
    """Raised when severing a tree along a cut that is not admissible."""


class LeafInput(TreeHopfError):
    """Raised by operations that are undefined on the leaf tree."""


class UnknownLabel(TreeHopfError):
    """Raised when a grafting target has no operation for a label."""
